/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_RELATION_LAWS_HPP
#define HUME_RELATION_LAWS_HPP

#include "model.hpp"

// Decidable laws over directed relations. A correspondence between two
// concepts is valid when each direction is a total, functional, exclusive
// mapping between the concepts; the two directions are judged independently.
// The projection/reflection vocabulary and the binding (stringTo/stringFrom)
// vocabulary state the same laws, so both facades share one kernel.

namespace hume {

// No source maps to two distinct targets.
bool is_functional(const DirectedRelation& r);

// No target receives two distinct sources (inverse-functionality).
bool is_exclusive(const DirectedRelation& r);

// Every object of c occurs as a source of r.
bool is_total_on(const DirectedRelation& r, const Concept& c);

// r is a total injective mapping from `from` into `to`: functional,
// exclusive, total on `from`, sources inside `from`, targets inside `to`.
// Stray endpoints make the mapping invalid rather than being ignored.
bool is_injective_mapping(const DirectedRelation& r, const Concept& from,
                          const Concept& to);

// phi.forward is a total injective mapping f -> g and phi.backward one
// g -> f. backward is NOT required to be reverse(forward).
bool is_valid_projection(const Correspondence& phi, const Concept& f,
                         const Concept& g);

// Same contract as is_valid_projection, under the binding vocabulary.
bool is_valid_binding(const Correspondence& phi, const Concept& f,
                      const Concept& g);

}  // namespace hume

#endif  // HUME_RELATION_LAWS_HPP
