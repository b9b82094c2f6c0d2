/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "cardinal.hpp"

#include <algorithm>

#include "equinumerosity.hpp"
#include "relation_laws.hpp"

namespace hume {

namespace {

// Reserved registry names; the document grammar cannot produce a '$'.
const std::string kZeroName = "$zero";
const std::string kOneName = "$one";

}  // namespace

NumberHandle NumberRegistry::number_of(const Concept& f) {
  for (ObjectId id : f.extension()) {
    if (!universe_->contains(id)) {
      throw Error(ErrorKind::foreign_universe,
                  "concept '" + f.name() +
                      "' references objects outside universe '" +
                      universe_->name() + "'");
    }
  }

  auto known = registered_.find(f.name());
  if (known != registered_.end()) {
    if (known->second.extension() != f.extension()) {
      throw Error(ErrorKind::duplicate_name,
                  "concept '" + f.name() +
                      "' is already registered with a different extension");
    }
    return NumberHandle{known->second.size()};
  }

  // Find the class by equinumerosity against one representative per class;
  // the canonical id of a fresh class is the concept's cardinality.
  std::size_t class_id = f.size();
  bool found = false;
  for (const auto& [id, rep] : representatives_) {
    if (exists_phi(rep, f).holds) {
      class_id = id;
      found = true;
      break;
    }
  }
  if (!found) representatives_.emplace(class_id, f);

  registered_.emplace(f.name(), f);
  members_[class_id].insert(f.name());
  return NumberHandle{class_id};
}

bool NumberRegistry::is_number(NumberHandle n) const {
  auto it = members_.find(n.class_id);
  return it != members_.end() && !it->second.empty();
}

NumberHandle NumberRegistry::zero() {
  return number_of(Concept(kZeroName, {}));
}

NumberHandle NumberRegistry::one() {
  if (universe_->object_count() == 0) {
    throw Error(ErrorKind::empty_universe,
                "universe '" + universe_->name() +
                    "' declares no object to witness a singleton");
  }
  ObjectId witness{0};
  Concept singleton(kOneName, {witness});

  // The object-level reading: the witness projects onto itself.
  DirectedRelation self_loop(std::vector<ObjectPair>{{witness, witness}});
  Correspondence phi{self_loop, self_loop};
  if (!is_valid_projection(phi, singleton, singleton)) {
    throw std::logic_error("self-loop correspondence failed validation");
  }

  return number_of(singleton);
}

Correspondence reflexivity_witness(const Concept& f) {
  std::vector<ObjectPair> loops;
  loops.reserve(f.size());
  for (ObjectId x : f.extension()) loops.emplace_back(x, x);
  DirectedRelation identity(std::move(loops));
  return Correspondence{identity, identity};
}

Correspondence symmetry_witness(const Correspondence& phi) {
  return Correspondence{phi.backward, phi.forward};
}

Correspondence transitivity_witness(const Correspondence& fg,
                                    const Correspondence& gh) {
  return Correspondence{compose(fg.forward, gh.forward),
                        compose(gh.backward, fg.backward)};
}

DirectedRelation compose(const DirectedRelation& r1,
                         const DirectedRelation& r2) {
  std::vector<ObjectPair> out;
  for (const auto& [x, y] : r1.pairs()) {
    for (const auto& [y2, z] : r2.pairs()) {
      if (y == y2) out.emplace_back(x, z);
    }
  }
  return DirectedRelation(std::move(out));
}

}  // namespace hume
