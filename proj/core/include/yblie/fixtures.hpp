#pragma once

#include "yblie/duality.hpp"

namespace yblie::fixtures {

// Shared structure library used by the test suites and shipped as data
// files.  Everything is built programmatically; the algebraic content is
// re-validated by the test suites rather than trusted.

/// Abelian 2-dimensional Lie algebra over Q, zero bracket, swap operator.
YBLieAlgebra ab2();
/// sl2 over Q: basis (e, h, f) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
YBLieAlgebra sl2();
/// Commutator Lie algebra of the 2x2 matrix algebra over Q.
YBLieAlgebra gl2();
/// The 2x2 matrix algebra over Q as a YB-algebra (swap operator, unital).
YBAlgebra m2();
/// Column module Q^2 over m2 (right action of matrix units on row vectors).
AlgebraModule m2_column_module();
/// Exterior algebra on one odd generator as a braided bialgebra (super).
BraidedBialgebra ext1();
/// Group algebra Q[Z_2].
BraidedBialgebra kz2();
/// Dual of the group algebra: functions on Z_2.
BraidedBialgebra kz2d();
/// Odd line over F_5 with the anyonic braiding (i = 2): squares to -id, so
/// the order-two axiom fails while the braid relation holds.
YBOperator any1();
/// Same counterexample over the Gaussian rationals.
YBOperator any1_gaussian();

/// sl2 acting on itself by the bracket (right module).
LieModule sl2_adjoint();
/// The evaluation Michaelis pair of sl2 (dual basis).
MichaelisPair sl2_pair();
/// Valid Michaelis pair with the zero pairing on ab2; strengthen rejects it.
MichaelisPair ab2_zero_ev_pair();
/// Self-pairing of ext1: <1,1> = <x,x> = 1.
TakeuchiPair ext1_takeuchi();
/// Evaluation pairing between kz2d and kz2.
TakeuchiPair kz2_takeuchi();

// Deliberately broken variants: each fails exactly one axiom.
/// Bracket entry [h,e] changed to 3e (antisymmetrically): Jacobi fails.
YBLieAlgebra sl2_broken();
/// Super braiding replaced by the plain swap: hopf_compatibility fails.
BraidedBialgebra ext1_broken();
/// ev scaled on the (f, f*) slot: mich1 fails.
MichaelisPair sl2_pair_broken();
/// Adjoint action doubled: action_law fails.
LieModule sl2_module_broken();

}  // namespace yblie::fixtures
