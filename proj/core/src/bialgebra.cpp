#include "yblie/bialgebra.hpp"

#include <utility>

#include "yblie/errors.hpp"
#include "yblie/linalg.hpp"

namespace yblie {

BraidedBialgebra::BraidedBialgebra(CategoryContext context, GradedObject object,
                                   ExactMorphism mul_map, ExactMorphism unit_map,
                                   ExactMorphism comul_map, ExactMorphism counit_map,
                                   ExactMorphism lambda_op)
    : ctx(std::move(context)), obj(std::move(object)), mul(std::move(mul_map)),
      unit(std::move(unit_map)), comul(std::move(comul_map)),
      counit(std::move(counit_map)), lambda(std::move(lambda_op)) {
  GradedObject sq = tensor(obj, obj);
  GradedObject i = GradedObject::unit();
  if (mul.source() != sq || mul.target() != obj)
    throw ShapeError("mul must map H tensor H to H");
  if (unit.source() != i || unit.target() != obj)
    throw ShapeError("unit must map I to H");
  if (comul.source() != obj || comul.target() != sq)
    throw ShapeError("comul must map H to H tensor H");
  if (counit.source() != obj || counit.target() != i)
    throw ShapeError("counit must map H to I");
  if (lambda.source() != sq || lambda.target() != sq)
    throw ShapeError("lambda must be an endomorphism of H tensor H");
}

YBAlgebra BraidedBialgebra::algebra_part() const {
  return YBAlgebra(ctx, obj, mul, lambda, unit);
}

YBCoalgebra BraidedBialgebra::coalgebra_part() const {
  return YBCoalgebra(ctx, obj, comul, lambda, counit);
}

ExactMorphism BraidedBialgebra::commutator_bracket() const {
  ExactMorphism id2 = ExactMorphism::identity(ctx.field(), tensor(obj, obj));
  return compose(mul, id2 - lambda);
}

ExactMorphism BraidedBialgebra::cocommutator() const {
  ExactMorphism id2 = ExactMorphism::identity(ctx.field(), tensor(obj, obj));
  return compose(id2 - lambda, comul);
}

CheckReport check_braided_bialgebra(const BraidedBialgebra& h) {
  CheckReport report;
  const Field& f = h.ctx.field();
  const GradedObject& o = h.obj;
  ExactMorphism id_h = ExactMorphism::identity(f, o);
  report.merge("algebra", check_yb_algebra(h.algebra_part()));
  report.merge("coalgebra", check_yb_coalgebra(h.coalgebra_part()));

  // lambda versus unit and counit.
  report.require_equal("lambda_unit_left", compose(h.lambda, tensor(h.unit, id_h)),
                       tensor(id_h, h.unit));
  report.require_equal("lambda_unit_right", compose(h.lambda, tensor(id_h, h.unit)),
                       tensor(h.unit, id_h));
  report.require_equal("lambda_counit_left",
                       compose(tensor(h.counit, id_h), h.lambda),
                       tensor(id_h, h.counit));
  report.require_equal("lambda_counit_right",
                       compose(tensor(id_h, h.counit), h.lambda),
                       tensor(h.counit, id_h));

  // counit is an algebra morphism, unit a coalgebra morphism.
  report.require_equal("counit_algebra_morphism", compose(h.counit, h.mul),
                       tensor(h.counit, h.counit));
  report.require_equal("unit_coalgebra_morphism", compose(h.comul, h.unit),
                       tensor(h.unit, h.unit));
  ExactMorphism id_i = ExactMorphism::identity(f, GradedObject::unit());
  report.require_equal("counit_unit", compose(h.counit, h.unit), id_i);

  // Delta o mul = (mul (x) mul) o (H (x) lambda (x) H) o (Delta (x) Delta).
  ExactMorphism mid = tensor(id_h, tensor(h.lambda, id_h));
  ExactMorphism rhs = compose(tensor(h.mul, h.mul),
                              compose(mid, tensor(h.comul, h.comul)));
  report.require_equal("hopf_compatibility", compose(h.comul, h.mul), rhs);
  return report;
}

Primitives primitives(const BraidedBialgebra& h) {
  CheckReport pre = check_braided_bialgebra(h);
  if (!pre.all_pass())
    throw InvalidInput("primitives: input fails the braided-bialgebra axioms (" +
                       pre.failing().front() + ")");
  const Field& f = h.ctx.field();
  ExactMorphism id_h = ExactMorphism::identity(f, h.obj);
  ExactMorphism split = tensor(h.unit, id_h) + tensor(id_h, h.unit);
  Matrix basis = kernel_basis((h.comul - split).mat());

  std::vector<std::uint8_t> degs(basis.cols(), 0);
  for (std::size_t j = 0; j < basis.cols(); ++j)
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (!basis.at(i, j).is_zero()) {
        degs[j] = h.obj.degree(i);
        break;
      }
  GradedObject p(std::move(degs));
  ExactMorphism eq(p, h.obj, std::move(basis));
  ExactMorphism eq2 = tensor(eq, eq);

  ExactMorphism lambda_p = [&] {
    try {
      Matrix m = solve_through_mono(eq2.mat(), compose(h.lambda, eq2).mat());
      return ExactMorphism(tensor(p, p), tensor(p, p), std::move(m));
    } catch (const NoFactorization&) {
      throw DescentFailure("primitives: lambda does not preserve P(H) tensor P(H)");
    }
  }();
  ExactMorphism bracket_h = h.commutator_bracket();
  ExactMorphism bracket_p = [&] {
    try {
      Matrix m = solve_through_mono(eq.mat(), compose(bracket_h, eq2).mat());
      return ExactMorphism(tensor(p, p), p, std::move(m));
    } catch (const NoFactorization&) {
      throw DescentFailure("primitives: the commutator bracket does not preserve P(H)");
    }
  }();

  YBLieAlgebra lie(h.ctx, p, std::move(lambda_p), std::move(bracket_p));
  CheckReport post = check_yb_lie_algebra(lie);
  if (!post.all_pass())
    throw InternalCheckFailure("primitives output failed its checker: " +
                               post.failing().front());
  return {std::move(p), std::move(eq), std::move(lie)};
}

Indecomposables indecomposables(const BraidedBialgebra& h) {
  CheckReport pre = check_braided_bialgebra(h);
  if (!pre.all_pass())
    throw InvalidInput(
        "indecomposables: input fails the braided-bialgebra axioms (" +
        pre.failing().front() + ")");
  const Field& f = h.ctx.field();
  ExactMorphism id_h = ExactMorphism::identity(f, h.obj);
  ExactMorphism glue = tensor(h.counit, id_h) + tensor(id_h, h.counit);
  Matrix proj = cokernel_projection((h.mul - glue).mat());

  std::vector<std::uint8_t> degs(proj.rows(), 0);
  for (std::size_t i = 0; i < proj.rows(); ++i)
    for (std::size_t j = 0; j < proj.cols(); ++j)
      if (!proj.at(i, j).is_zero()) {
        degs[i] = h.obj.degree(j);
        break;
      }
  GradedObject q(std::move(degs));
  ExactMorphism coeq(h.obj, q, std::move(proj));
  ExactMorphism coeq2 = tensor(coeq, coeq);

  ExactMorphism gamma_q = [&] {
    try {
      Matrix m = solve_through_epi(coeq2.mat(), compose(coeq2, h.lambda).mat());
      return ExactMorphism(tensor(q, q), tensor(q, q), std::move(m));
    } catch (const NoCofactorization&) {
      throw DescentFailure("indecomposables: lambda does not descend to Q(H)");
    }
  }();
  ExactMorphism cobr_h = h.cocommutator();
  ExactMorphism cobr_q = [&] {
    try {
      Matrix m = solve_through_epi(coeq.mat(), compose(coeq2, cobr_h).mat());
      return ExactMorphism(q, tensor(q, q), std::move(m));
    } catch (const NoCofactorization&) {
      throw DescentFailure("indecomposables: the cocommutator does not descend to Q(H)");
    }
  }();

  YBLieCoalgebra lie(h.ctx, q, std::move(gamma_q), std::move(cobr_q));
  CheckReport post = check_yb_lie_coalgebra(lie);
  if (!post.all_pass())
    throw InternalCheckFailure("indecomposables output failed its checker: " +
                               post.failing().front());
  return {std::move(q), std::move(coeq), std::move(lie)};
}

}  // namespace yblie
