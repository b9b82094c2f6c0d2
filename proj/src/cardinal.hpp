/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_CARDINAL_HPP
#define HUME_CARDINAL_HPP

#include <map>
#include <set>
#include <string>

#include "model.hpp"

// Numbers as equivalence classes of concepts. Two registered concepts share
// a class exactly when a valid correspondence exists between them; the class
// is keyed by the shared finite cardinality, which doubles as the canonical
// class id. The registry is the only mutable state in the engine: mutations
// must be serialized externally, reads of a quiescent registry are safe in
// parallel.

namespace hume {

struct NumberHandle {
  std::size_t class_id = 0;

  friend auto operator<=>(const NumberHandle&, const NumberHandle&) = default;
};

class NumberRegistry {
 public:
  explicit NumberRegistry(const Universe& universe) : universe_(&universe) {}

  // Handle of f's equivalence class, registering f if new. Idempotent.
  // Throws Error{foreign_universe} when f mentions undeclared objects and
  // Error{duplicate_name} when f's name is already registered with a
  // different extension.
  NumberHandle number_of(const Concept& f);

  // True iff some registered concept belongs to class n.
  bool is_number(NumberHandle n) const;

  // number_of the canonical empty concept. Its class is witnessed by the
  // empty correspondence: no projection, hence no reflection.
  NumberHandle zero();

  // number_of a singleton over the universe's first object, after verifying
  // that the self-loop correspondence on that singleton is valid. Throws
  // Error{empty_universe} when no object exists to witness it.
  NumberHandle one();

  const Universe& universe() const { return *universe_; }
  const std::map<std::size_t, std::set<std::string>>& classes() const {
    return members_;
  }

 private:
  const Universe* universe_;
  std::map<std::size_t, std::set<std::string>> members_;  // class -> names
  std::map<std::string, Concept> registered_;             // name -> concept
  std::map<std::size_t, Concept> representatives_;        // class -> witness
};

// Constructive equivalence-law witnesses. Each returns a correspondence
// that passes the validity predicate over the indicated concept pair
// whenever its inputs do.
//
// reflexivity: identity correspondence over (f, f).
Correspondence reflexivity_witness(const Concept& f);
// symmetry: swapping directions of a valid f~g correspondence gives g~f.
Correspondence symmetry_witness(const Correspondence& phi);
// transitivity: composing f~g and g~h direction-wise gives f~h.
Correspondence transitivity_witness(const Correspondence& fg,
                                    const Correspondence& gh);

// Relation composition: (x, z) iff some y links (x, y) in r1 and (y, z) in
// r2. Helper for transitivity_witness, exposed for tests.
DirectedRelation compose(const DirectedRelation& r1,
                         const DirectedRelation& r2);

}  // namespace hume

#endif  // HUME_CARDINAL_HPP
