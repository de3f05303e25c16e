#pragma once

#include <optional>

#include "yblie/lie.hpp"

namespace yblie {

/// Associative algebra with a self-invertible YB operator compatible with
/// the multiplication.  The unit is optional (the commutator construction
/// does not need one).
struct YBAlgebra {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism mul;     // B (x) B -> B
  ExactMorphism lambda;  // B (x) B -> B (x) B
  std::optional<ExactMorphism> unit;  // I -> B

  YBAlgebra(CategoryContext context, GradedObject object, ExactMorphism mul_map,
            ExactMorphism lambda_op,
            std::optional<ExactMorphism> unit_map = std::nullopt);
};

/// Coassociative coalgebra with a compatible YB operator; counit optional.
struct YBCoalgebra {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism comul;   // C -> C (x) C
  ExactMorphism gamma;   // C (x) C -> C (x) C
  std::optional<ExactMorphism> counit;  // C -> I

  YBCoalgebra(CategoryContext context, GradedObject object,
              ExactMorphism comul_map, ExactMorphism gamma_op,
              std::optional<ExactMorphism> counit_map = std::nullopt);
};

/// Module over a YB-algebra (plain associative action, no Lie structure).
struct AlgebraModule {
  YBAlgebra algebra;
  GradedObject carrier;
  ExactMorphism action;  // M (x) B -> M (right) or B (x) M -> M (left)
  Side side = Side::Right;

  AlgebraModule(YBAlgebra alg, GradedObject m, ExactMorphism act,
                Side s = Side::Right);
};

/// Axioms: associativity, unit laws (when present), lambda.order_two,
/// lambda.yang_baxter, compat_mul_left, compat_mul_right.
///
/// The lambda/mul squares are oriented so that for the honest symmetry they
/// reduce to naturality: lambda o (mul (x) B) = (B (x) mul) o t o a and
/// lambda o (B (x) mul) = (mul (x) B) o a^-1 o w.
CheckReport check_yb_algebra(const YBAlgebra& b);
CheckReport check_yb_coalgebra(const YBCoalgebra& c);
/// Constituent algebra axioms plus "action_law" (associativity of the
/// action) and "unit_law" when the algebra is unital.
CheckReport check_algebra_module(const AlgebraModule& m);

/// Commutator YB-Lie algebra (B, lambda, mul o (id - lambda)).  Throws
/// InvalidInput when B fails its checker.
YBLieAlgebra commutator_lie(const YBAlgebra& b);

/// Cocommutator YB-Lie coalgebra (C, gamma, (id - gamma) o comul).
YBLieCoalgebra cocommutator_lie(const YBCoalgebra& c);

/// A right B-module is a Lie module over the commutator algebra with the
/// same action map (the induction functor on objects).
LieModule induce_from_algebra_module(const AlgebraModule& m);

/// H_B(T,X): maps T -> X intertwining the right B-actions, as the equalizer
/// of the two curried maps H(T,X) -> H(T (x) B, X).
HomSubspace hom_over_algebra(const AlgebraModule& t, const AlgebraModule& x);

/// The right B-module LH(B,N) for a Lie module N over commutator_lie(B):
/// carrier LH(B_reg, N) with (f . b)(s) = f(b s).  B_reg is B acting on
/// itself by right multiplication.
AlgebraModule lie_hom_as_module(const YBAlgebra& b, const LieModule& n);

}  // namespace yblie
