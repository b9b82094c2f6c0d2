/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "relation_laws.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hume {

bool is_functional(const DirectedRelation& r) {
  // Pairs are sorted by (source, target): duplicate sources are adjacent.
  const auto& pairs = r.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) return false;
  }
  return true;
}

bool is_exclusive(const DirectedRelation& r) {
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(r.size());
  for (const auto& [s, t] : r.pairs()) {
    if (!seen.insert(t.ordinal).second) return false;
  }
  return true;
}

bool is_total_on(const DirectedRelation& r, const Concept& c) {
  std::unordered_set<std::uint32_t> sources;
  sources.reserve(r.size());
  for (const auto& [s, t] : r.pairs()) sources.insert(s.ordinal);
  return std::all_of(c.extension().begin(), c.extension().end(),
                     [&](ObjectId x) { return sources.count(x.ordinal); });
}

bool is_injective_mapping(const DirectedRelation& r, const Concept& from,
                          const Concept& to) {
  if (!is_functional(r) || !is_exclusive(r)) return false;
  for (const auto& [s, t] : r.pairs()) {
    if (!from.contains(s) || !to.contains(t)) return false;
  }
  return is_total_on(r, from);
}

namespace {

// Shared kernel behind the two named facades.
bool is_valid_correspondence(const Correspondence& phi, const Concept& f,
                             const Concept& g) {
  return is_injective_mapping(phi.forward, f, g) &&
         is_injective_mapping(phi.backward, g, f);
}

}  // namespace

bool is_valid_projection(const Correspondence& phi, const Concept& f,
                         const Concept& g) {
  return is_valid_correspondence(phi, f, g);
}

bool is_valid_binding(const Correspondence& phi, const Concept& f,
                      const Concept& g) {
  return is_valid_correspondence(phi, f, g);
}

}  // namespace hume
