/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_MODEL_HPP
#define HUME_MODEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

// Value types for finite universes: objects, concepts (finite extensions),
// directed relations over objects, and two-sided correspondences. Everything
// here is a plain value, immutable once built, and safe to share across
// threads. A Universe is assembled through its declare/define calls and is
// treated as frozen afterwards.

namespace hume {

enum class ErrorKind {
  duplicate_name,
  undeclared_object,
  foreign_universe,
  empty_universe,
  cap_exceeded,
  malformed_restriction,
  unknown_name,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// An interned object. The ordinal is the object's declaration index inside
// its universe; the symbol lives in the universe's intern table. All
// orderings in the engine (enumeration, serialization, certificates) are
// fixed by ordinals.
struct ObjectId {
  std::uint32_t ordinal = 0;

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

using ObjectPair = std::pair<ObjectId, ObjectId>;

// A finite set of ordered object pairs, kept sorted and duplicate-free.
class DirectedRelation {
 public:
  DirectedRelation() = default;
  explicit DirectedRelation(std::vector<ObjectPair> pairs);

  const std::vector<ObjectPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const ObjectPair& p) const;

  friend auto operator<=>(const DirectedRelation&,
                          const DirectedRelation&) = default;

 private:
  std::vector<ObjectPair> pairs_;  // sorted by (source, target)
};

// Swaps every pair; involutive.
DirectedRelation reverse(const DirectedRelation& r);

// Zips two equally long object lists into the relation
// {(sources[i], targets[i])}. Throws std::invalid_argument on length
// mismatch.
DirectedRelation pairwise(const std::vector<ObjectId>& sources,
                          const std::vector<ObjectId>& targets);

// A named finite extension. Extensions are sorted sets of ObjectId and may
// be empty.
class Concept {
 public:
  Concept() = default;
  Concept(std::string name, std::vector<ObjectId> extension);

  const std::string& name() const { return name_; }
  const std::vector<ObjectId>& extension() const { return extension_; }
  std::size_t size() const { return extension_.size(); }
  bool empty() const { return extension_.empty(); }
  bool contains(ObjectId id) const;

  friend bool operator==(const Concept&, const Concept&) = default;

 private:
  std::string name_;
  std::vector<ObjectId> extension_;  // sorted, unique
};

// Two directions of one correspondence. The directions are stored
// independently; nothing ties backward to reverse(forward). Whether the
// pair forms a valid correspondence between two concepts is a separate
// predicate (see relation_laws.hpp).
struct Correspondence {
  DirectedRelation forward;   // intended F -> G
  DirectedRelation backward;  // intended G -> F

  friend bool operator==(const Correspondence&,
                         const Correspondence&) = default;
};

// Evidence attached to a decision. A Witness carries a correspondence that
// passes the validity predicate; a CardinalityMismatch refutes existence by
// size; a DeficiencySet exhibits a set of objects on one side with strictly
// fewer allowed partners than members.
struct WitnessCertificate {
  Correspondence phi;

  friend bool operator==(const WitnessCertificate&,
                         const WitnessCertificate&) = default;
};

struct CardinalityMismatch {
  std::size_t size_f = 0;
  std::size_t size_g = 0;

  friend bool operator==(const CardinalityMismatch&,
                         const CardinalityMismatch&) = default;
};

enum class ConceptSide { f, g };

struct DeficiencySet {
  ConceptSide side = ConceptSide::f;
  std::vector<ObjectId> objects;  // sorted by ordinal

  friend bool operator==(const DeficiencySet&,
                         const DeficiencySet&) = default;
};

using Certificate =
    std::variant<WitnessCertificate, CardinalityMismatch, DeficiencySet>;

// A universe of declared objects plus named concepts and relations over
// them. Names are unique per category; every object referenced by a concept
// or relation must have been declared first. Built once, then read-only.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  ObjectId declare_object(std::string symbol);
  const Concept& define_concept(const std::string& name,
                                std::vector<ObjectId> extension);
  const DirectedRelation& define_relation(const std::string& name,
                                          std::vector<ObjectPair> pairs);

  std::size_t object_count() const { return symbols_.size(); }
  bool contains(ObjectId id) const { return id.ordinal < symbols_.size(); }
  const std::string& symbol(ObjectId id) const;
  std::optional<ObjectId> find_object(std::string_view symbol) const;

  const Concept* find_concept(std::string_view name) const;
  const DirectedRelation* find_relation(std::string_view name) const;

  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::map<std::string, Concept>& concepts() const { return concepts_; }
  const std::map<std::string, DirectedRelation>& relations() const {
    return relations_;
  }

  // Throws Error{undeclared_object} naming the first offender.
  void require_declared(const std::vector<ObjectId>& ids,
                        std::string_view context) const;
  void require_declared(const std::vector<ObjectPair>& pairs,
                        std::string_view context) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::string name_;
  std::vector<std::string> symbols_;          // ordinal -> symbol
  std::map<std::string, ObjectId> by_symbol_;  // symbol -> id
  std::map<std::string, Concept> concepts_;
  std::map<std::string, DirectedRelation> relations_;
};

}  // namespace hume

#endif  // HUME_MODEL_HPP
