/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include "matching.hpp"
#include "relation_laws.hpp"
#include "test_support.hpp"

using namespace hume;
using support::ids;
using support::obj;
using support::rel;

TEST_CASE("trivial matchings") {
  CHECK(max_matching(ids({0, 1}), ids({2, 3}), DirectedRelation{}).empty());

  // Complete bipartite 3x3 has a perfect matching.
  std::vector<ObjectPair> complete;
  for (unsigned s = 0; s < 3; ++s) {
    for (unsigned t = 3; t < 6; ++t) complete.emplace_back(obj(s), obj(t));
  }
  DirectedRelation m = max_matching(ids({0, 1, 2}), ids({3, 4, 5}),
                                    DirectedRelation(complete));
  CHECK(m.size() == 3);
}

TEST_CASE("matchings are functional, exclusive sub-relations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nl = 1 + support::pick(rng, 10);
    std::size_t nr = 1 + support::pick(rng, 10);
    std::vector<ObjectId> left = support::range_ids(nl);
    std::vector<ObjectId> right;
    for (std::size_t i = 0; i < nr; ++i) {
      right.push_back(obj(static_cast<unsigned>(100 + i)));
    }
    std::vector<ObjectPair> edges;
    std::size_t edge_count = support::pick(rng, nl * nr + 1);
    for (std::size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(left[support::pick(rng, nl)],
                         right[support::pick(rng, nr)]);
    }
    DirectedRelation graph(std::move(edges));

    DirectedRelation m = max_matching(left, right, graph);
    CHECK(is_functional(m));
    CHECK(is_exclusive(m));
    for (const auto& p : m.pairs()) CHECK(graph.contains(p));

    // Exhaustive-search oracle agrees on the size.
    CHECK(m.size() == support::oracle::max_matching_size(left, right, graph));
  }
}

TEST_CASE("matching size is invariant under relabeling") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nl = 1 + support::pick(rng, 7);
    std::size_t nr = 1 + support::pick(rng, 7);
    std::vector<ObjectId> left = support::range_ids(nl);
    std::vector<ObjectId> right;
    for (std::size_t i = 0; i < nr; ++i) {
      right.push_back(obj(static_cast<unsigned>(50 + i)));
    }
    std::vector<ObjectPair> edges;
    for (std::size_t i = 0, n = support::pick(rng, nl * nr + 1); i < n; ++i) {
      edges.emplace_back(left[support::pick(rng, nl)],
                         right[support::pick(rng, nr)]);
    }
    DirectedRelation graph(edges);

    // Relabel: object k becomes 1000 - 3k on both sides.
    auto relabel = [](ObjectId id) {
      return obj(static_cast<unsigned>(1000 - 3 * id.ordinal));
    };
    std::vector<ObjectId> left2, right2;
    for (ObjectId id : left) left2.push_back(relabel(id));
    for (ObjectId id : right) right2.push_back(relabel(id));
    std::vector<ObjectPair> edges2;
    for (const auto& [s, t] : edges) edges2.emplace_back(relabel(s), relabel(t));

    CHECK(max_matching(left, right, graph).size() ==
          max_matching(left2, right2, DirectedRelation(edges2)).size());
  }
}

TEST_CASE("edges outside the sides are rejected") {
  CHECK_THROWS_AS(
      max_matching(ids({0}), ids({1}), rel({{0, 2}})), Error);
  CHECK_THROWS_AS(
      max_matching(ids({0}), ids({1}), rel({{1, 0}})), Error);
}

TEST_CASE("hall violators have fewer neighbours than members") {
  // Both sources compete for the one target.
  DirectedRelation graph = rel({{0, 2}, {1, 2}});
  DirectedRelation m = max_matching(ids({0, 1}), ids({2, 3}), graph);
  REQUIRE(m.size() == 1);
  std::vector<ObjectId> s = hall_violator(ids({0, 1}), ids({2, 3}), graph, m);
  CHECK(s == ids({0, 1}));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + support::pick(rng, 6);
    std::vector<ObjectId> left = support::range_ids(n);
    std::vector<ObjectId> right;
    for (std::size_t i = 0; i < n; ++i) {
      right.push_back(obj(static_cast<unsigned>(20 + i)));
    }
    std::vector<ObjectPair> edges;
    for (std::size_t i = 0, e = support::pick(rng, n * n); i < e; ++i) {
      edges.emplace_back(left[support::pick(rng, n)],
                         right[support::pick(rng, n)]);
    }
    DirectedRelation graph2(edges);
    DirectedRelation matching = max_matching(left, right, graph2);
    std::vector<ObjectId> violator =
        hall_violator(left, right, graph2, matching);
    if (matching.size() == n) {
      CHECK(violator.empty());
      continue;
    }
    REQUIRE(!violator.empty());

    // Count the joint neighbourhood of the violator inside the graph.
    std::set<ObjectId> members(violator.begin(), violator.end());
    std::set<ObjectId> neighbours;
    for (const auto& [s2, t2] : graph2.pairs()) {
      if (members.count(s2)) neighbours.insert(t2);
    }
    CHECK(neighbours.size() < violator.size());
  }
}
