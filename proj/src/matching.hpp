/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_MATCHING_HPP
#define HUME_MATCHING_HPP

#include "model.hpp"

namespace hume {

// Maximum-cardinality bipartite matching between two object sets. Edges must
// run left -> right; anything else throws Error{malformed_restriction}. The
// result is a functional, exclusive sub-relation of edges. Hopcroft-Karp,
// O(E * sqrt(V)); adjacency is visited in ordinal order so the output is
// deterministic.
DirectedRelation max_matching(const std::vector<ObjectId>& left,
                              const std::vector<ObjectId>& right,
                              const DirectedRelation& edges);

// Given a *maximum* matching that leaves part of `left` unmatched, returns a
// set S of left objects with strictly fewer neighbours than members: the
// union of the left ends of all alternating paths out of unmatched left
// objects. Returns an empty vector when the matching saturates `left`.
std::vector<ObjectId> hall_violator(const std::vector<ObjectId>& left,
                                    const std::vector<ObjectId>& right,
                                    const DirectedRelation& edges,
                                    const DirectedRelation& matching);

}  // namespace hume

#endif  // HUME_MATCHING_HPP
