/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_EQUIVALENCE_HPP
#define HUME_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "equinumerosity.hpp"
#include "model.hpp"

// Cross-verification of three readings of "same number": the two-directional
// correspondence (projection and binding facades), the classical reciprocal
// bijection, and plain cardinality equality. On finite concepts all four
// must classify identically; the report makes that an observable fact
// rather than an assumption, cell by cell.

namespace hume {

// The strict one-to-one baseline: a single relation that is functional,
// exclusive, total on f, and whose reverse is total on g.
bool bijection_exists(const Concept& f, const Concept& g);

// n! when |f| = |g| = n, else 0. Obeys the enumeration cap like
// enumerate_phi does.
PhiCount count_bijections(const Concept& f, const Concept& g,
                          std::size_t cap = kDefaultEnumerationCap);

// A valid correspondence whose backward direction is not the reverse of its
// forward direction: the first one in enumeration order. Exists exactly
// when |f| = |g| >= 2.
std::optional<Correspondence> find_nonreciprocal_phi(const Concept& f,
                                                     const Concept& g);

struct EquivalenceCell {
  std::size_t size_f = 0;
  std::size_t size_g = 0;
  bool projection = false;
  bool binding = false;
  bool bijection = false;
  bool cardinality = false;

  bool agree() const {
    return projection == binding && binding == bijection &&
           bijection == cardinality;
  }
};

struct EquivalenceDiscrepancy {
  std::size_t size_f = 0;
  std::size_t size_g = 0;
  std::string detail;
};

struct EquivalenceReport {
  std::size_t max_size = 0;
  std::vector<EquivalenceCell> cells;  // row-major over (|F|, |G|)
  std::vector<EquivalenceDiscrepancy> discrepancies;  // empty on success
  std::vector<PhiCount> phi_counts;        // index n: same-size pair count
  std::vector<PhiCount> bijection_counts;  // index n: n!
};

// Evaluates every size pair up to max_size over canonical fresh concepts.
// Existence under the projection and binding facades is decided by searching
// all total assignments per direction and validating them against the laws,
// not by comparing cardinalities. Throws Error{cap_exceeded} when
// max_size > cap.
EquivalenceReport equivalence_report(std::size_t max_size,
                                     std::size_t cap = kDefaultEnumerationCap);

struct RelabelingSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t mismatches = 0;
};

// Randomized relabeling of the canonical cells: objects are reshuffled into
// fresh extensions and all four verdicts recomputed; any difference from the
// canonical verdicts counts as a mismatch. Equinumerosity is invariant under
// relabeling, so mismatches should always be zero.
RelabelingSummary relabeling_trials(std::size_t max_size, std::size_t trials,
                                    std::uint64_t seed,
                                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace hume

#endif  // HUME_EQUIVALENCE_HPP
