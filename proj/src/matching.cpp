/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace hume {

namespace {

constexpr int kNil = -1;
constexpr int kInf = std::numeric_limits<int>::max();

// Dense-index view of the bipartite graph; index order equals ordinal order.
struct DenseGraph {
  std::vector<ObjectId> left;   // sorted
  std::vector<ObjectId> right;  // sorted
  std::vector<std::vector<int>> adj;  // per left index, sorted right indexes

  static DenseGraph build(std::vector<ObjectId> left_in,
                          std::vector<ObjectId> right_in,
                          const DirectedRelation& edges) {
    DenseGraph g;
    g.left = std::move(left_in);
    g.right = std::move(right_in);
    std::sort(g.left.begin(), g.left.end());
    g.left.erase(std::unique(g.left.begin(), g.left.end()), g.left.end());
    std::sort(g.right.begin(), g.right.end());
    g.right.erase(std::unique(g.right.begin(), g.right.end()), g.right.end());

    std::map<ObjectId, int> left_index, right_index;
    for (std::size_t i = 0; i < g.left.size(); ++i)
      left_index[g.left[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < g.right.size(); ++i)
      right_index[g.right[i]] = static_cast<int>(i);

    g.adj.resize(g.left.size());
    for (const auto& [s, t] : edges.pairs()) {
      auto ls = left_index.find(s);
      auto rt = right_index.find(t);
      if (ls == left_index.end() || rt == right_index.end()) {
        throw Error(ErrorKind::malformed_restriction,
                    "edge endpoints must lie in the given sides");
      }
      g.adj[ls->second].push_back(rt->second);
    }
    // edges.pairs() is sorted, so each adjacency list already is too.
    return g;
  }
};

struct HopcroftKarp {
  const DenseGraph& g;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const DenseGraph& graph)
      : g(graph),
        match_left(graph.left.size(), kNil),
        match_right(graph.right.size(), kNil),
        dist(graph.left.size(), kInf) {}

  bool bfs() {
    std::deque<int> queue;
    bool reachable_free_right = false;
    for (std::size_t u = 0; u < g.left.size(); ++u) {
      if (match_left[u] == kNil) {
        dist[u] = 0;
        queue.push_back(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.adj[u]) {
        int w = match_right[v];
        if (w == kNil) {
          reachable_free_right = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reachable_free_right;
  }

  bool dfs(int u) {
    for (int v : g.adj[u]) {
      int w = match_right[v];
      if (w == kNil || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (std::size_t u = 0; u < g.left.size(); ++u) {
        if (match_left[u] == kNil) dfs(static_cast<int>(u));
      }
    }
  }
};

}  // namespace

DirectedRelation max_matching(const std::vector<ObjectId>& left,
                              const std::vector<ObjectId>& right,
                              const DirectedRelation& edges) {
  DenseGraph g = DenseGraph::build(left, right, edges);
  HopcroftKarp hk(g);
  hk.run();

  std::vector<ObjectPair> matched;
  for (std::size_t u = 0; u < g.left.size(); ++u) {
    if (hk.match_left[u] != kNil) {
      matched.emplace_back(g.left[u], g.right[hk.match_left[u]]);
    }
  }
  return DirectedRelation(std::move(matched));
}

std::vector<ObjectId> hall_violator(const std::vector<ObjectId>& left,
                                    const std::vector<ObjectId>& right,
                                    const DirectedRelation& edges,
                                    const DirectedRelation& matching) {
  DenseGraph g = DenseGraph::build(left, right, edges);

  std::vector<int> match_left(g.left.size(), kNil);
  std::vector<int> match_right(g.right.size(), kNil);
  {
    std::map<ObjectId, int> left_index, right_index;
    for (std::size_t i = 0; i < g.left.size(); ++i) left_index[g.left[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < g.right.size(); ++i) right_index[g.right[i]] = static_cast<int>(i);
    for (const auto& [s, t] : matching.pairs()) {
      match_left[left_index.at(s)] = right_index.at(t);
      match_right[right_index.at(t)] = left_index.at(s);
    }
  }

  // Alternating BFS from every unmatched left vertex: non-matching edges
  // left->right, matching edges right->left.
  std::vector<bool> seen_left(g.left.size(), false);
  std::vector<bool> seen_right(g.right.size(), false);
  std::deque<int> queue;
  for (std::size_t u = 0; u < g.left.size(); ++u) {
    if (match_left[u] == kNil) {
      seen_left[u] = true;
      queue.push_back(static_cast<int>(u));
    }
  }
  if (queue.empty()) return {};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u]) {
      if (seen_right[v]) continue;
      seen_right[v] = true;
      int w = match_right[v];
      if (w != kNil && !seen_left[w]) {
        seen_left[w] = true;
        queue.push_back(w);
      }
    }
  }

  std::vector<ObjectId> violator;
  for (std::size_t u = 0; u < g.left.size(); ++u) {
    if (seen_left[u]) violator.push_back(g.left[u]);
  }
  return violator;
}

}  // namespace hume
