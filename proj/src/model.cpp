/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "model.hpp"

#include <algorithm>

namespace hume {

DirectedRelation::DirectedRelation(std::vector<ObjectPair> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool DirectedRelation::contains(const ObjectPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

DirectedRelation reverse(const DirectedRelation& r) {
  std::vector<ObjectPair> swapped;
  swapped.reserve(r.size());
  for (const auto& [s, t] : r.pairs()) swapped.emplace_back(t, s);
  return DirectedRelation(std::move(swapped));
}

DirectedRelation pairwise(const std::vector<ObjectId>& sources,
                          const std::vector<ObjectId>& targets) {
  if (sources.size() != targets.size()) {
    throw std::invalid_argument("pairwise requires equally long lists");
  }
  std::vector<ObjectPair> pairs;
  pairs.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    pairs.emplace_back(sources[i], targets[i]);
  }
  return DirectedRelation(std::move(pairs));
}

Concept::Concept(std::string name, std::vector<ObjectId> extension)
    : name_(std::move(name)), extension_(std::move(extension)) {
  std::sort(extension_.begin(), extension_.end());
  extension_.erase(std::unique(extension_.begin(), extension_.end()),
                   extension_.end());
}

bool Concept::contains(ObjectId id) const {
  return std::binary_search(extension_.begin(), extension_.end(), id);
}

ObjectId Universe::declare_object(std::string symbol) {
  if (by_symbol_.count(symbol)) {
    throw Error(ErrorKind::duplicate_name,
                "object '" + symbol + "' is already declared");
  }
  ObjectId id{static_cast<std::uint32_t>(symbols_.size())};
  by_symbol_.emplace(symbol, id);
  symbols_.push_back(std::move(symbol));
  return id;
}

const Concept& Universe::define_concept(const std::string& name,
                                        std::vector<ObjectId> extension) {
  if (concepts_.count(name)) {
    throw Error(ErrorKind::duplicate_name,
                "concept '" + name + "' is already defined");
  }
  require_declared(extension, "concept '" + name + "'");
  auto [it, _] = concepts_.emplace(name, Concept(name, std::move(extension)));
  return it->second;
}

const DirectedRelation& Universe::define_relation(
    const std::string& name, std::vector<ObjectPair> pairs) {
  if (relations_.count(name)) {
    throw Error(ErrorKind::duplicate_name,
                "relation '" + name + "' is already defined");
  }
  require_declared(pairs, "relation '" + name + "'");
  auto [it, _] =
      relations_.emplace(name, DirectedRelation(std::move(pairs)));
  return it->second;
}

const std::string& Universe::symbol(ObjectId id) const {
  if (!contains(id)) {
    throw Error(ErrorKind::undeclared_object,
                "ordinal " + std::to_string(id.ordinal) +
                    " is not declared in universe '" + name_ + "'");
  }
  return symbols_[id.ordinal];
}

std::optional<ObjectId> Universe::find_object(std::string_view symbol) const {
  auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

const Concept* Universe::find_concept(std::string_view name) const {
  auto it = concepts_.find(std::string(name));
  return it == concepts_.end() ? nullptr : &it->second;
}

const DirectedRelation* Universe::find_relation(std::string_view name) const {
  auto it = relations_.find(std::string(name));
  return it == relations_.end() ? nullptr : &it->second;
}

void Universe::require_declared(const std::vector<ObjectId>& ids,
                                std::string_view context) const {
  for (ObjectId id : ids) {
    if (!contains(id)) {
      throw Error(ErrorKind::undeclared_object,
                  std::string(context) + " references undeclared ordinal " +
                      std::to_string(id.ordinal));
    }
  }
}

void Universe::require_declared(const std::vector<ObjectPair>& pairs,
                                std::string_view context) const {
  for (const auto& [s, t] : pairs) {
    if (!contains(s) || !contains(t)) {
      ObjectId bad = contains(s) ? t : s;
      throw Error(ErrorKind::undeclared_object,
                  std::string(context) + " references undeclared ordinal " +
                      std::to_string(bad.ordinal));
    }
  }
}

}  // namespace hume
