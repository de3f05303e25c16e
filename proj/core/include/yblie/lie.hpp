#pragma once

#include "yblie/report.hpp"
#include "yblie/yb.hpp"

namespace yblie {

/// YB-Lie algebra: object L, YB operator lambda, bracket L (x) L -> L.
struct YBLieAlgebra {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism lambda;   // L (x) L -> L (x) L
  ExactMorphism bracket;  // L (x) L -> L

  YBLieAlgebra(CategoryContext context, GradedObject object,
               ExactMorphism lambda_op, ExactMorphism bracket_map);
  YBOperator yb() const { return YBOperator(ctx, obj, lambda); }
};

/// YB-Lie coalgebra: the formal dual, with cobracket C -> C (x) C.
struct YBLieCoalgebra {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism gamma;      // C (x) C -> C (x) C
  ExactMorphism cobracket;  // C -> C (x) C

  YBLieCoalgebra(CategoryContext context, GradedObject object,
                 ExactMorphism gamma_op, ExactMorphism cobracket_map);
  YBOperator yb() const { return YBOperator(ctx, obj, gamma); }
};

/// Axioms: lambda.order_two, lambda.yang_baxter, antisymmetry, jacobi,
/// compatibility.
CheckReport check_yb_lie_algebra(const YBLieAlgebra& alg);

/// Dual axioms: gamma.order_two, gamma.yang_baxter, antisymmetry, cojacobi,
/// compatibility.
CheckReport check_yb_lie_coalgebra(const YBLieCoalgebra& coalg);

/// The left-handed Jacobi composite; zero for every YB-Lie algebra (a
/// derived identity, tested as a property rather than reported as an axiom).
ExactMorphism left_jacobi_defect(const YBLieAlgebra& alg);
/// Dual derived identity for coalgebras.
ExactMorphism left_cojacobi_defect(const YBLieCoalgebra& coalg);

/// Opposite Lie algebra (L, lambda, bracket o lambda).
YBLieAlgebra opposite(const YBLieAlgebra& alg);

/// Morphism conditions: dst.bracket o (phi (x) phi) = phi o src.bracket and
/// dst.lambda o (phi (x) phi) = (phi (x) phi) o src.lambda.
CheckReport check_morphism(const ExactMorphism& phi, const YBLieAlgebra& src,
                           const YBLieAlgebra& dst);
/// Dual: psi : C -> C' with (psi (x) psi) o Upsilon = Upsilon' o psi.
CheckReport check_comorphism(const ExactMorphism& psi, const YBLieCoalgebra& src,
                             const YBLieCoalgebra& dst);

enum class Side { Left, Right };

/// Lie module: carrier X with action X (x) L -> X (right) or L (x) X -> X
/// (left).  The right orientation is the primary one.
struct LieModule {
  YBLieAlgebra algebra;
  GradedObject carrier;
  ExactMorphism action;
  Side side = Side::Right;

  LieModule(YBLieAlgebra alg, GradedObject x, ExactMorphism act,
            Side s = Side::Right);
};

struct LieComodule {
  YBLieCoalgebra coalgebra;
  GradedObject carrier;
  ExactMorphism coaction;  // X -> X (x) C (right) or X -> C (x) X (left)
  Side side = Side::Right;

  LieComodule(YBLieCoalgebra coalg, GradedObject x, ExactMorphism coact,
              Side s = Side::Right);
};

/// Constituent algebra axioms under "algebra." plus "action_law".
CheckReport check_lie_module(const LieModule& m);
/// Constituent coalgebra axioms under "coalgebra." plus "coaction_law".
CheckReport check_lie_comodule(const LieComodule& m);

/// Side conversions, valid in symmetric flavors only: the right action is
/// -(left action) o c_{X,L} and vice versa.  Throws NotSymmetricContext.
LieModule to_right_module(const LieModule& m);
LieModule to_left_module(const LieModule& m);
LieComodule to_right_comodule(const LieComodule& m);
LieComodule to_left_comodule(const LieComodule& m);

/// Induction X |-> X (x) M for a right module M: carrier X (x) M with action
/// (X (x) rho) o a.
LieModule induce_module(const LieModule& m, const GradedObject& x);

/// A graded subobject with its canonical inclusion into an internal hom.
struct HomSubspace {
  GradedObject obj;
  ExactMorphism inclusion;
};

/// LH(M,N): the equalizer of the two curried maps H(M,N) -> H(M (x) L, N)
/// for right modules M, N over one algebra.  Columns of the inclusion are
/// the canonical kernel basis.
HomSubspace lie_hom_space(const LieModule& m, const LieModule& n);

/// H(X,X) with its commutator bracket and the context symmetry, the target
/// of representations.  Symmetric flavors only.
YBLieAlgebra endo_lie_algebra(const CategoryContext& ctx, const GradedObject& x);

/// phi = curry(action) : L -> H(X,X) for a left module; the result is a
/// YB-Lie algebra morphism into endo_lie_algebra (checked by callers/tests).
ExactMorphism module_to_representation(const LieModule& m);
/// Inverse construction: action = eps o (phi (x) X).
LieModule representation_to_module(const YBLieAlgebra& alg,
                                   const GradedObject& x,
                                   const ExactMorphism& phi);

}  // namespace yblie
