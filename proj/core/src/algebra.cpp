#include "yblie/algebra.hpp"

#include <utility>

#include "yblie/errors.hpp"
#include "yblie/hom.hpp"
#include "yblie/linalg.hpp"

namespace yblie {

YBAlgebra::YBAlgebra(CategoryContext context, GradedObject object,
                     ExactMorphism mul_map, ExactMorphism lambda_op,
                     std::optional<ExactMorphism> unit_map)
    : ctx(std::move(context)), obj(std::move(object)), mul(std::move(mul_map)),
      lambda(std::move(lambda_op)), unit(std::move(unit_map)) {
  GradedObject sq = tensor(obj, obj);
  if (mul.source() != sq || mul.target() != obj)
    throw ShapeError("mul must map B tensor B to B");
  if (lambda.source() != sq || lambda.target() != sq)
    throw ShapeError("lambda must be an endomorphism of B tensor B");
  if (unit && (unit->source() != GradedObject::unit() || unit->target() != obj))
    throw ShapeError("unit must map I to B");
}

YBCoalgebra::YBCoalgebra(CategoryContext context, GradedObject object,
                         ExactMorphism comul_map, ExactMorphism gamma_op,
                         std::optional<ExactMorphism> counit_map)
    : ctx(std::move(context)), obj(std::move(object)), comul(std::move(comul_map)),
      gamma(std::move(gamma_op)), counit(std::move(counit_map)) {
  GradedObject sq = tensor(obj, obj);
  if (comul.source() != obj || comul.target() != sq)
    throw ShapeError("comul must map C to C tensor C");
  if (gamma.source() != sq || gamma.target() != sq)
    throw ShapeError("gamma must be an endomorphism of C tensor C");
  if (counit && (counit->source() != obj || counit->target() != GradedObject::unit()))
    throw ShapeError("counit must map C to I");
}

AlgebraModule::AlgebraModule(YBAlgebra alg, GradedObject m, ExactMorphism act,
                             Side s)
    : algebra(std::move(alg)), carrier(std::move(m)), action(std::move(act)),
      side(s) {
  GradedObject expected = side == Side::Right
                              ? tensor(carrier, algebra.obj)
                              : tensor(algebra.obj, carrier);
  if (action.source() != expected || action.target() != carrier)
    throw ShapeError("algebra module action has the wrong boundary");
}

CheckReport check_yb_algebra(const YBAlgebra& b) {
  CheckReport report;
  const Field& f = b.ctx.field();
  const GradedObject& o = b.obj;
  ExactMorphism id_b = ExactMorphism::identity(f, o);
  ExactMorphism a = associator(b.ctx, o, o, o);
  report.require_equal("associativity", compose(b.mul, tensor(b.mul, id_b)),
                       compose(b.mul, compose(tensor(id_b, b.mul), a)));
  if (b.unit) {
    report.require_equal("unit_left", compose(b.mul, tensor(*b.unit, id_b)), id_b);
    report.require_equal("unit_right", compose(b.mul, tensor(id_b, *b.unit)), id_b);
  }
  YBOperator op(b.ctx, o, b.lambda);
  report.merge("lambda", check_yb_operator(op));
  ThreeStrand tw = derive_t_w(op);
  ExactMorphism a_inv = associator_inv(b.ctx, o, o, o);
  report.require_equal("compat_mul_left",
                       compose(b.lambda, tensor(b.mul, id_b)),
                       compose(tensor(id_b, b.mul), compose(tw.t, a)));
  report.require_equal("compat_mul_right",
                       compose(b.lambda, tensor(id_b, b.mul)),
                       compose(tensor(b.mul, id_b), compose(a_inv, tw.w)));
  return report;
}

CheckReport check_yb_coalgebra(const YBCoalgebra& c) {
  CheckReport report;
  const Field& f = c.ctx.field();
  const GradedObject& o = c.obj;
  ExactMorphism id_c = ExactMorphism::identity(f, o);
  ExactMorphism a = associator(c.ctx, o, o, o);
  report.require_equal("coassociativity",
                       compose(a, compose(tensor(c.comul, id_c), c.comul)),
                       compose(tensor(id_c, c.comul), c.comul));
  if (c.counit) {
    report.require_equal("counit_left",
                         compose(tensor(*c.counit, id_c), c.comul), id_c);
    report.require_equal("counit_right",
                         compose(tensor(id_c, *c.counit), c.comul), id_c);
  }
  YBOperator op(c.ctx, o, c.gamma);
  report.merge("gamma", check_yb_operator(op));
  ThreeStrand tw = derive_t_w(op);
  ExactMorphism a_inv = associator_inv(c.ctx, o, o, o);
  // Duals of the algebra squares: (comul (x) C) o gamma = a^-1 o w o (C (x) comul)
  // and (C (x) comul) o gamma = t o a o (comul (x) C).
  report.require_equal("compat_comul_left",
                       compose(tensor(c.comul, id_c), c.gamma),
                       compose(a_inv, compose(tw.w, tensor(id_c, c.comul))));
  report.require_equal("compat_comul_right",
                       compose(tensor(id_c, c.comul), c.gamma),
                       compose(tw.t, compose(a, tensor(c.comul, id_c))));
  return report;
}

CheckReport check_algebra_module(const AlgebraModule& m) {
  CheckReport report;
  report.merge("algebra", check_yb_algebra(m.algebra));
  const Field& f = m.algebra.ctx.field();
  const GradedObject& b = m.algebra.obj;
  const GradedObject& x = m.carrier;
  ExactMorphism id_b = ExactMorphism::identity(f, b);
  ExactMorphism id_x = ExactMorphism::identity(f, x);
  if (m.side == Side::Right) {
    ExactMorphism a = associator(m.algebra.ctx, x, b, b);
    report.require_equal("action_law",
                         compose(m.action, tensor(m.action, id_b)),
                         compose(m.action, compose(tensor(id_x, m.algebra.mul), a)));
    if (m.algebra.unit)
      report.require_equal("unit_law",
                           compose(m.action, tensor(id_x, *m.algebra.unit)), id_x);
  } else {
    ExactMorphism a = associator(m.algebra.ctx, b, b, x);
    report.require_equal("action_law",
                         compose(m.action, compose(tensor(id_b, m.action), a)),
                         compose(m.action, tensor(m.algebra.mul, id_x)));
    if (m.algebra.unit)
      report.require_equal("unit_law",
                           compose(m.action, tensor(*m.algebra.unit, id_x)), id_x);
  }
  return report;
}

YBLieAlgebra commutator_lie(const YBAlgebra& b) {
  CheckReport pre = check_yb_algebra(b);
  if (!pre.all_pass())
    throw InvalidInput("commutator_lie: input fails the YB-algebra axioms (" +
                       pre.failing().front() + ")");
  ExactMorphism id2 =
      ExactMorphism::identity(b.ctx.field(), tensor(b.obj, b.obj));
  YBLieAlgebra out(b.ctx, b.obj, b.lambda, compose(b.mul, id2 - b.lambda));
  CheckReport post = check_yb_lie_algebra(out);
  if (!post.all_pass())
    throw InternalCheckFailure("commutator_lie output failed its checker: " +
                               post.failing().front());
  return out;
}

YBLieCoalgebra cocommutator_lie(const YBCoalgebra& c) {
  CheckReport pre = check_yb_coalgebra(c);
  if (!pre.all_pass())
    throw InvalidInput("cocommutator_lie: input fails the YB-coalgebra axioms (" +
                       pre.failing().front() + ")");
  ExactMorphism id2 =
      ExactMorphism::identity(c.ctx.field(), tensor(c.obj, c.obj));
  YBLieCoalgebra out(c.ctx, c.obj, c.gamma, compose(id2 - c.gamma, c.comul));
  CheckReport post = check_yb_lie_coalgebra(out);
  if (!post.all_pass())
    throw InternalCheckFailure("cocommutator_lie output failed its checker: " +
                               post.failing().front());
  return out;
}

LieModule induce_from_algebra_module(const AlgebraModule& m) {
  if (m.side != Side::Right)
    throw ShapeError("induce_from_algebra_module expects a right module");
  CheckReport pre = check_algebra_module(m);
  if (!pre.all_pass())
    throw InvalidInput("induce_from_algebra_module: module fails its checker (" +
                       pre.failing().front() + ")");
  LieModule out(commutator_lie(m.algebra), m.carrier, m.action, Side::Right);
  CheckReport post = check_lie_module(out);
  if (!post.all_pass())
    throw InternalCheckFailure("induced Lie module failed its checker: " +
                               post.failing().front());
  return out;
}

HomSubspace hom_over_algebra(const AlgebraModule& t, const AlgebraModule& x) {
  if (t.side != Side::Right || x.side != Side::Right)
    throw ShapeError("hom_over_algebra expects right modules");
  if (t.algebra.ctx != x.algebra.ctx || t.algebra.obj != x.algebra.obj ||
      t.algebra.mul != x.algebra.mul)
    throw ShapeError("hom_over_algebra: modules over different algebras");
  const Field& f = t.algebra.ctx.field();
  const GradedObject& b = t.algebra.obj;
  GradedObject h = hom_object(t.carrier, x.carrier);
  GradedObject tb = tensor(t.carrier, b);
  ExactMorphism id_h = ExactMorphism::identity(f, h);
  ExactMorphism eps = hom_counit(f, t.carrier, x.carrier);
  ExactMorphism one = curry(compose(eps, tensor(id_h, t.action)), h, tb);
  ExactMorphism a_inv = associator_inv(t.algebra.ctx, h, t.carrier, b);
  ExactMorphism two = curry(
      compose(x.action, compose(tensor(eps, ExactMorphism::identity(f, b)), a_inv)),
      h, tb);
  Matrix basis = kernel_basis((one - two).mat());
  std::vector<std::uint8_t> degs;
  degs.reserve(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::uint8_t d = 0;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (!basis.at(i, j).is_zero()) {
        d = h.degree(i);
        break;
      }
    degs.push_back(d);
  }
  GradedObject obj(std::move(degs));
  return {obj, ExactMorphism(obj, h, std::move(basis))};
}

AlgebraModule lie_hom_as_module(const YBAlgebra& b, const LieModule& n) {
  if (!b.unit)
    throw InvalidInput("lie_hom_as_module requires a unital algebra");
  const Field& f = b.ctx.field();
  YBLieAlgebra lb = commutator_lie(b);
  // B acting on itself by right multiplication is a Lie module over L(B).
  LieModule regular(lb, b.obj, b.mul, Side::Right);
  HomSubspace lh = lie_hom_space(regular, n);
  // (f . b)(s) = f(b s): curry eps o (id (x) mul) and restrict along the
  // inclusion; the subspace is stable, so the solve cannot fail.
  GradedObject h = hom_object(b.obj, n.carrier);
  ExactMorphism eps = hom_counit(f, b.obj, n.carrier);
  ExactMorphism act_h =
      curry(compose(eps, tensor(ExactMorphism::identity(f, h), b.mul)),
            tensor(h, b.obj), b.obj);
  ExactMorphism id_b = ExactMorphism::identity(f, b.obj);
  ExactMorphism restricted = compose(act_h, tensor(lh.inclusion, id_b));
  Matrix solved;
  try {
    solved = solve_through_mono(lh.inclusion.mat(), restricted.mat());
  } catch (const NoFactorization&) {
    throw InternalCheckFailure("LH(B,N) is not stable under the B-action");
  }
  ExactMorphism action(tensor(lh.obj, b.obj), lh.obj, std::move(solved));
  return AlgebraModule(b, lh.obj, std::move(action), Side::Right);
}

}  // namespace yblie
