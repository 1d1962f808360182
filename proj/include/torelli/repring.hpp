#pragma once

// The exact representation ring of sp_g: characters and dimensions of
// irreducibles, decomposition of Weyl-invariant characters into
// irreducibles, tensor products, exterior and symmetric powers, Adams
// operations, graded pieces of free Lie algebras, and the stabilization
// map between ranks.
//
// Irreducible characters are built with Freudenthal's multiplicity
// recursion; the Weyl alternating sum and Klimyk's weight-translation
// rule are kept as independent cross-check oracles.

#include "torelli/character.hpp"
#include "torelli/virtual_rep.hpp"
#include "torelli/weight.hpp"

namespace torelli::repring {

// Weyl dimension formula for type C_g.
Int weyl_dim(const Weight& lambda);

// Full character of V(lambda) via Freudenthal's recursion.  Results are
// memoized per (g, lambda).
Character irrep_character(const Weight& lambda);

// Character of a virtual representation.
Character character_of(const VirtualRep& r);

// Decompose a Weyl-invariant character by dominant peeling, in strictly
// decreasing lexicographic order on partition form.  Throws if the input
// is not Weyl invariant.
VirtualRep decompose(const Character& chi);

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);

// Independent tensor-product oracle: Klimyk's weight-translation rule for
// a pair of irreducibles.
VirtualRep tensor_klimyk(const Weight& lambda, const Weight& mu);

// k-th exterior / symmetric power of a genuine representation, via the
// Newton recursion over Adams operations.  Throws on virtual input with
// negative multiplicities.
VirtualRep exterior_power(const VirtualRep& r, int k);
VirtualRep symmetric_power(const VirtualRep& r, int k);
Character adams(int d, const Character& chi);

// Degree-n graded piece of the free Lie algebra on a genuine module,
// by the character-level Witt/necklace formula.
VirtualRep free_lie_graded(const VirtualRep& gen, int n);

// Stabilization R(sp_g) -> R(sp_h), h >= g: same partitions at rank h.
VirtualRep stabilize(const VirtualRep& r, int h);

// Virtual dimension: sum of mult * weyl_dim.
Int dim(const VirtualRep& r);

// Cross-check oracle: evaluates the Weyl character formula
// A_{lambda+rho}/A_rho at the exact point t_i = z^{w_i} and compares with
// the same evaluation of a Freudenthal character.  Intended for tests and
// the CLI --check-weyl-sum flag; cost is |W| = 2^g g! per point.
bool weyl_alternating_sum_check(const Weight& lambda, const Character& chi);

}  // namespace torelli::repring
