/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "equinumerosity.hpp"

#include <algorithm>

#include "matching.hpp"
#include "relation_laws.hpp"

namespace hume {

PhiCount factorial(std::size_t n) {
  PhiCount acc = 1;
  for (std::size_t i = 2; i <= n; ++i) acc *= static_cast<unsigned>(i);
  return acc;
}

namespace {

// The ordinal-ordered pairing: i-th smallest of f onto i-th smallest of g.
Correspondence canonical_witness(const Concept& f, const Concept& g) {
  return Correspondence{pairwise(f.extension(), g.extension()),
                        pairwise(g.extension(), f.extension())};
}

}  // namespace

namespace detail {

std::optional<DirectedRelation> first_injective_mapping(const Concept& from,
                                                        const Concept& to) {
  const auto& sources = from.extension();
  const auto& targets = to.extension();
  std::vector<std::size_t> choice(sources.size(), 0);
  std::vector<bool> used(targets.size(), false);

  // Depth-first over target choices in ordinal order; the first complete
  // assignment that passes the laws is the lexicographically smallest
  // injection.
  std::size_t depth = 0;
  while (true) {
    if (depth == sources.size()) {
      std::vector<ObjectPair> pairs;
      pairs.reserve(sources.size());
      for (std::size_t i = 0; i < sources.size(); ++i) {
        pairs.emplace_back(sources[i], targets[choice[i]]);
      }
      DirectedRelation candidate(std::move(pairs));
      if (is_injective_mapping(candidate, from, to)) return candidate;
      if (depth == 0) return std::nullopt;
      --depth;
      used[choice[depth]] = false;
      ++choice[depth];
      continue;
    }
    bool advanced = false;
    for (std::size_t t = choice[depth]; t < targets.size(); ++t) {
      if (!used[t]) {
        choice[depth] = t;
        used[t] = true;
        ++depth;
        if (depth < sources.size()) choice[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (depth == 0) return std::nullopt;
      --depth;
      used[choice[depth]] = false;
      ++choice[depth];
    }
  }
}

}  // namespace detail

ExistsResult exists_phi(const Concept& f, const Concept& g,
                        ExistsStrategy strategy) {
  if (strategy == ExistsStrategy::exhaustive) {
    auto forward = detail::first_injective_mapping(f, g);
    auto backward = detail::first_injective_mapping(g, f);
    if (forward && backward) {
      return {true, WitnessCertificate{
                        Correspondence{std::move(*forward),
                                       std::move(*backward)}}};
    }
    return {false, CardinalityMismatch{f.size(), g.size()}};
  }

  if (f.size() != g.size()) {
    return {false, CardinalityMismatch{f.size(), g.size()}};
  }
  Correspondence phi = canonical_witness(f, g);
  if (!is_valid_projection(phi, f, g)) {
    throw std::logic_error("constructed witness failed revalidation");
  }
  return {true, WitnessCertificate{std::move(phi)}};
}

PhiEnumerator::PhiEnumerator(const Concept& f, const Concept& g,
                             std::size_t cap) {
  if (f.size() > cap || g.size() > cap) {
    throw Error(ErrorKind::cap_exceeded,
                "enumeration over sizes " + std::to_string(f.size()) + " and " +
                    std::to_string(g.size()) + " exceeds the cap of " +
                    std::to_string(cap));
  }
  if (f.size() != g.size()) {
    done_ = true;
    return;
  }
  f_objects_ = f.extension();
  g_objects_ = g.extension();
  forward_targets_ = g_objects_;
  backward_targets_ = f_objects_;
}

std::optional<Correspondence> PhiEnumerator::next() {
  if (done_) return std::nullopt;
  Correspondence phi{pairwise(f_objects_, forward_targets_),
                     pairwise(g_objects_, backward_targets_)};
  if (!std::next_permutation(backward_targets_.begin(),
                             backward_targets_.end())) {
    if (!std::next_permutation(forward_targets_.begin(),
                               forward_targets_.end())) {
      done_ = true;
    }
  }
  return phi;
}

std::vector<Correspondence> enumerate_phi(const Concept& f, const Concept& g,
                                          std::size_t cap) {
  PhiEnumerator stream(f, g, cap);
  std::vector<Correspondence> all;
  while (auto phi = stream.next()) all.push_back(std::move(*phi));
  return all;
}

PhiCount count_phi(const Concept& f, const Concept& g) {
  if (f.size() != g.size()) return 0;
  PhiCount per_direction = factorial(f.size());
  return per_direction * per_direction;
}

ExistsResult exists_phi_within(const Concept& f, const Concept& g,
                               const DirectedRelation& allowed) {
  std::vector<ObjectPair> usable;
  for (const auto& [s, t] : allowed.pairs()) {
    if ((!f.contains(s) && !g.contains(s)) ||
        (!f.contains(t) && !g.contains(t))) {
      throw Error(ErrorKind::malformed_restriction,
                  "allowed pairs may only mention objects of the two "
                  "concepts");
    }
    if (f.contains(s) && g.contains(t)) usable.emplace_back(s, t);
  }

  if (f.size() != g.size()) {
    return {false, CardinalityMismatch{f.size(), g.size()}};
  }

  DirectedRelation graph(std::move(usable));
  DirectedRelation matching = max_matching(f.extension(), g.extension(), graph);
  if (matching.size() == f.size()) {
    Correspondence phi{matching, reverse(matching)};
    if (!is_valid_projection(phi, f, g)) {
      throw std::logic_error("matching produced an invalid witness");
    }
    return {true, WitnessCertificate{std::move(phi)}};
  }
  return {false,
          DeficiencySet{ConceptSide::f,
                        hall_violator(f.extension(), g.extension(), graph,
                                      matching)}};
}

}  // namespace hume
