/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_EQUINUMEROSITY_HPP
#define HUME_EQUINUMEROSITY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "model.hpp"

// Decision, enumeration, counting and certification of correspondences
// between two finite concepts. A correspondence exists iff the concepts have
// equal size; when it does, the forward and backward directions range over
// all total injective mappings independently, so a size-n pair admits
// exactly (n!)^2 distinct correspondences.

namespace hume {

// Exact unbounded count; (n!)^2 grows past any machine width quickly.
using PhiCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationCap = 6;

PhiCount factorial(std::size_t n);

struct ExistsResult {
  bool holds = false;
  Certificate certificate;
};

// The cardinality strategy decides by size comparison and constructs the
// ordinal-ordered witness directly; the exhaustive strategy searches for
// each direction by backtracking and is kept as a slow cross-checking path.
// Both return the same witness when one exists.
enum class ExistsStrategy { cardinality, exhaustive };

ExistsResult exists_phi(const Concept& f, const Concept& g,
                        ExistsStrategy strategy = ExistsStrategy::cardinality);

// Ordered, single-consumer stream of every valid correspondence between f
// and g. Correspondences come out exactly once, sorted lexicographically by
// (forward pairs, backward pairs) under object ordinals. The constructor
// throws Error{cap_exceeded} when either concept is larger than `cap`.
class PhiEnumerator {
 public:
  PhiEnumerator(const Concept& f, const Concept& g,
                std::size_t cap = kDefaultEnumerationCap);

  std::optional<Correspondence> next();

 private:
  std::vector<ObjectId> f_objects_, g_objects_;      // sorted
  std::vector<ObjectId> forward_targets_, backward_targets_;
  bool done_ = false;
};

// Convenience eager form of PhiEnumerator.
std::vector<Correspondence> enumerate_phi(
    const Concept& f, const Concept& g,
    std::size_t cap = kDefaultEnumerationCap);

// Closed form: (n!)^2 when |f| = |g| = n, otherwise 0. Not capped.
PhiCount count_phi(const Concept& f, const Concept& g);

// Restricted existence: is there a correspondence whose forward direction
// lies inside `allowed` and whose backward direction lies inside
// reverse(allowed)? Decides via maximum matching; failure is certified by a
// CardinalityMismatch or by a deficiency set with fewer allowed partners
// than members. Pairs of `allowed` that mention objects outside f and g
// raise Error{malformed_restriction}.
ExistsResult exists_phi_within(const Concept& f, const Concept& g,
                               const DirectedRelation& allowed);

namespace detail {

// Lexicographically first total injective mapping from -> to, if any.
std::optional<DirectedRelation> first_injective_mapping(const Concept& from,
                                                        const Concept& to);

}  // namespace detail

}  // namespace hume

#endif  // HUME_EQUINUMEROSITY_HPP
