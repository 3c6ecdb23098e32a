#ifndef FCORE_CORE_HPP
#define FCORE_CORE_HPP

#include <vector>

#include "fcore/automaton.hpp"
#include "fcore/element.hpp"

namespace fcore {

/// The Stallings 2-core of the subgroup generated by gens: each generator's
/// two trees are glued leaf-by-leaf and root-to-root into a sphere, all
/// sphere roots are fused, and foldings are applied to closure. Generators
/// must be reduced; the empty set yields the single-vertex automaton.
Automaton build_core(const std::vector<TreeDiagram>& gens);

/// Membership in the closure: the core accepts the reduced diagram.
bool closure_contains(const Automaton& core_h, const TreeDiagram& f);

/// True iff the closure contains the derived subgroup of F: exactly one
/// middle vertex exists and it is inner (both edges are then self-loops).
bool closure_contains_derived(const Automaton& core_h);

/// True iff the subgroup's action on dyadic fractions has finitely many
/// orbits: every vertex of the (finite) core is inner.
bool finitely_many_dyadic_orbits(const Automaton& core_h);

} // namespace fcore

#endif
