#include "yblie/lie.hpp"

#include <utility>

#include "yblie/errors.hpp"
#include "yblie/hom.hpp"
#include "yblie/linalg.hpp"

namespace yblie {

namespace {

void require_symmetric(const CategoryContext& ctx, const char* what) {
  if (!ctx.symmetric() || ctx.associator_flavor() != AssociatorFlavor::Trivial)
    throw NotSymmetricContext(std::string(what) +
                              " requires a symmetric (trivial or super, "
                              "strictly associative) context");
}

/// Degrees of the canonical-basis columns of an inclusion matrix; every
/// column of a kernel basis of a degree-preserving map is homogeneous.
GradedObject column_degrees(const Matrix& basis, const GradedObject& ambient) {
  std::vector<std::uint8_t> degrees(basis.cols(), 0);
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (basis.at(i, j).is_zero()) continue;
      if (!found) {
        degrees[j] = ambient.degree(i);
        found = true;
      } else if (ambient.degree(i) != degrees[j]) {
        throw InternalCheckFailure("kernel basis column is not homogeneous");
      }
    }
    if (!found) throw InternalCheckFailure("kernel basis has a zero column");
  }
  return GradedObject(std::move(degrees));
}

}  // namespace

YBLieAlgebra::YBLieAlgebra(CategoryContext context, GradedObject object,
                           ExactMorphism lambda_op, ExactMorphism bracket_map)
    : ctx(std::move(context)), obj(std::move(object)),
      lambda(std::move(lambda_op)), bracket(std::move(bracket_map)) {
  GradedObject sq = tensor(obj, obj);
  if (lambda.source() != sq || lambda.target() != sq)
    throw ShapeError("lambda must be an endomorphism of L tensor L");
  if (bracket.source() != sq || bracket.target() != obj)
    throw ShapeError("bracket must map L tensor L to L");
  if (!(lambda.mat().field() == ctx.field()))
    throw FieldMismatch("lambda field differs from context field");
}

YBLieCoalgebra::YBLieCoalgebra(CategoryContext context, GradedObject object,
                               ExactMorphism gamma_op, ExactMorphism cobracket_map)
    : ctx(std::move(context)), obj(std::move(object)),
      gamma(std::move(gamma_op)), cobracket(std::move(cobracket_map)) {
  GradedObject sq = tensor(obj, obj);
  if (gamma.source() != sq || gamma.target() != sq)
    throw ShapeError("gamma must be an endomorphism of C tensor C");
  if (cobracket.source() != obj || cobracket.target() != sq)
    throw ShapeError("cobracket must map C to C tensor C");
  if (!(gamma.mat().field() == ctx.field()))
    throw FieldMismatch("gamma field differs from context field");
}

CheckReport check_yb_lie_algebra(const YBLieAlgebra& alg) {
  CheckReport report;
  const Field& f = alg.ctx.field();
  const GradedObject& l = alg.obj;
  YBOperator op(alg.ctx, l, alg.lambda);
  report.merge("lambda", check_yb_operator(op));

  ExactMorphism id2 = ExactMorphism::identity(f, tensor(l, l));
  report.require_zero("antisymmetry", compose(alg.bracket, id2 + alg.lambda));

  ThreeStrand tw = derive_t_w(op);
  ExactMorphism id_l = ExactMorphism::identity(f, l);
  ExactMorphism id3 = ExactMorphism::identity(f, tensor(l, tensor(l, l)));
  ExactMorphism inner = tensor(id_l, alg.bracket);  // L (x) (L (x) L) -> L (x) L
  report.require_zero(
      "jacobi", compose(alg.bracket, compose(inner, id3 + tw.t + tw.w)));

  ExactMorphism a = associator(alg.ctx, l, l, l);
  ExactMorphism lhs = compose(alg.lambda, tensor(alg.bracket, id_l));
  ExactMorphism rhs = compose(tensor(id_l, alg.bracket), compose(tw.t, a));
  report.require_equal("compatibility", lhs, rhs);
  return report;
}

CheckReport check_yb_lie_coalgebra(const YBLieCoalgebra& coalg) {
  CheckReport report;
  const Field& f = coalg.ctx.field();
  const GradedObject& c = coalg.obj;
  YBOperator op(coalg.ctx, c, coalg.gamma);
  report.merge("gamma", check_yb_operator(op));

  ExactMorphism id2 = ExactMorphism::identity(f, tensor(c, c));
  report.require_zero("antisymmetry", compose(id2 + coalg.gamma, coalg.cobracket));

  ThreeStrand tw = derive_t_w(op);
  ExactMorphism id_c = ExactMorphism::identity(f, c);
  ExactMorphism id3 = ExactMorphism::identity(f, tensor(c, tensor(c, c)));
  ExactMorphism inner = tensor(id_c, coalg.cobracket);  // C (x) C -> C (x) (C (x) C)
  report.require_zero(
      "cojacobi",
      compose(id3 + tw.w + tw.t, compose(inner, coalg.cobracket)));

  ExactMorphism a_inv = associator_inv(coalg.ctx, c, c, c);
  ExactMorphism lhs = compose(tensor(coalg.cobracket, id_c), coalg.gamma);
  ExactMorphism rhs = compose(a_inv, compose(tw.w, tensor(id_c, coalg.cobracket)));
  report.require_equal("compatibility", lhs, rhs);
  return report;
}

ExactMorphism left_jacobi_defect(const YBLieAlgebra& alg) {
  const Field& f = alg.ctx.field();
  const GradedObject& l = alg.obj;
  YBOperator op(alg.ctx, l, alg.lambda);
  ThreeStrand tw = derive_t_w(op);
  ExactMorphism id_l = ExactMorphism::identity(f, l);
  ExactMorphism id3 = ExactMorphism::identity(f, tensor(l, tensor(l, l)));
  ExactMorphism a_inv = associator_inv(alg.ctx, l, l, l);
  return compose(alg.bracket,
                 compose(tensor(alg.bracket, id_l),
                         compose(a_inv, id3 + tw.t + tw.w)));
}

ExactMorphism left_cojacobi_defect(const YBLieCoalgebra& coalg) {
  const Field& f = coalg.ctx.field();
  const GradedObject& c = coalg.obj;
  YBOperator op(coalg.ctx, c, coalg.gamma);
  ThreeStrand tw = derive_t_w(op);
  ExactMorphism id_c = ExactMorphism::identity(f, c);
  ExactMorphism id3 = ExactMorphism::identity(f, tensor(c, tensor(c, c)));
  ExactMorphism a = associator(coalg.ctx, c, c, c);
  return compose(id3 + tw.t + tw.w,
                 compose(a, compose(tensor(coalg.cobracket, id_c),
                                    coalg.cobracket)));
}

YBLieAlgebra opposite(const YBLieAlgebra& alg) {
  return YBLieAlgebra(alg.ctx, alg.obj, alg.lambda,
                      compose(alg.bracket, alg.lambda));
}

CheckReport check_morphism(const ExactMorphism& phi, const YBLieAlgebra& src,
                           const YBLieAlgebra& dst) {
  if (phi.source() != src.obj || phi.target() != dst.obj)
    throw ShapeError("morphism boundary does not match the Lie algebras");
  if (src.ctx != dst.ctx)
    throw ShapeError("morphism across different contexts");
  CheckReport report;
  ExactMorphism phi2 = tensor(phi, phi);
  report.require_equal("respect_bracket", compose(dst.bracket, phi2),
                       compose(phi, src.bracket));
  report.require_equal("respect_yb", compose(dst.lambda, phi2),
                       compose(phi2, src.lambda));
  return report;
}

CheckReport check_comorphism(const ExactMorphism& psi, const YBLieCoalgebra& src,
                             const YBLieCoalgebra& dst) {
  if (psi.source() != src.obj || psi.target() != dst.obj)
    throw ShapeError("comorphism boundary does not match the Lie coalgebras");
  if (src.ctx != dst.ctx)
    throw ShapeError("comorphism across different contexts");
  CheckReport report;
  ExactMorphism psi2 = tensor(psi, psi);
  report.require_equal("respect_cobracket", compose(psi2, src.cobracket),
                       compose(dst.cobracket, psi));
  report.require_equal("respect_yb", compose(dst.gamma, psi2),
                       compose(psi2, src.gamma));
  return report;
}

LieModule::LieModule(YBLieAlgebra alg, GradedObject x, ExactMorphism act, Side s)
    : algebra(std::move(alg)), carrier(std::move(x)), action(std::move(act)),
      side(s) {
  GradedObject expected = side == Side::Right
                              ? tensor(carrier, algebra.obj)
                              : tensor(algebra.obj, carrier);
  if (action.source() != expected || action.target() != carrier)
    throw ShapeError("Lie module action has the wrong boundary");
}

LieComodule::LieComodule(YBLieCoalgebra coalg, GradedObject x,
                         ExactMorphism coact, Side s)
    : coalgebra(std::move(coalg)), carrier(std::move(x)),
      coaction(std::move(coact)), side(s) {
  GradedObject expected = side == Side::Right
                              ? tensor(carrier, coalgebra.obj)
                              : tensor(coalgebra.obj, carrier);
  if (coaction.source() != carrier || coaction.target() != expected)
    throw ShapeError("Lie comodule coaction has the wrong boundary");
}

CheckReport check_lie_module(const LieModule& m) {
  CheckReport report;
  report.merge("algebra", check_yb_lie_algebra(m.algebra));
  const Field& f = m.algebra.ctx.field();
  const GradedObject& l = m.algebra.obj;
  const GradedObject& x = m.carrier;
  ExactMorphism id_l = ExactMorphism::identity(f, l);
  ExactMorphism id_x = ExactMorphism::identity(f, x);
  if (m.side == Side::Right) {
    ExactMorphism a_inv = associator_inv(m.algebra.ctx, x, l, l);
    ExactMorphism first = compose(tensor(m.action, id_l), a_inv);
    ExactMorphism second = compose(first, tensor(id_x, m.algebra.lambda));
    ExactMorphism third = tensor(id_x, m.algebra.bracket);
    report.require_zero("action_law",
                        compose(m.action, first - second - third));
  } else {
    ExactMorphism a = associator(m.algebra.ctx, l, l, x);
    ExactMorphism first = compose(tensor(id_l, m.action), a);
    ExactMorphism second = compose(first, tensor(m.algebra.lambda, id_x));
    ExactMorphism third = tensor(m.algebra.bracket, id_x);
    report.require_zero("action_law",
                        compose(m.action, first - second - third));
  }
  return report;
}

CheckReport check_lie_comodule(const LieComodule& m) {
  CheckReport report;
  report.merge("coalgebra", check_yb_lie_coalgebra(m.coalgebra));
  const Field& f = m.coalgebra.ctx.field();
  const GradedObject& c = m.coalgebra.obj;
  const GradedObject& x = m.carrier;
  ExactMorphism id_c = ExactMorphism::identity(f, c);
  ExactMorphism id_x = ExactMorphism::identity(f, x);
  if (m.side == Side::Right) {
    ExactMorphism a = associator(m.coalgebra.ctx, x, c, c);
    ExactMorphism first = compose(a, tensor(m.coaction, id_c));
    ExactMorphism second = compose(tensor(id_x, m.coalgebra.gamma), first);
    ExactMorphism third = tensor(id_x, m.coalgebra.cobracket);
    report.require_zero("coaction_law",
                        compose(first - second - third, m.coaction));
  } else {
    ExactMorphism a_inv = associator_inv(m.coalgebra.ctx, c, c, x);
    ExactMorphism first = compose(a_inv, tensor(id_c, m.coaction));
    ExactMorphism second = compose(tensor(m.coalgebra.gamma, id_x), first);
    ExactMorphism third = tensor(m.coalgebra.cobracket, id_x);
    report.require_zero("coaction_law",
                        compose(first - second - third, m.coaction));
  }
  return report;
}

LieModule to_right_module(const LieModule& m) {
  if (m.side == Side::Right) return m;
  require_symmetric(m.algebra.ctx, "module side conversion");
  ExactMorphism c = braiding(m.algebra.ctx, m.carrier, m.algebra.obj);
  return LieModule(m.algebra, m.carrier, -compose(m.action, c), Side::Right);
}

LieModule to_left_module(const LieModule& m) {
  if (m.side == Side::Left) return m;
  require_symmetric(m.algebra.ctx, "module side conversion");
  ExactMorphism c = braiding(m.algebra.ctx, m.algebra.obj, m.carrier);
  return LieModule(m.algebra, m.carrier, -compose(m.action, c), Side::Left);
}

LieComodule to_right_comodule(const LieComodule& m) {
  if (m.side == Side::Right) return m;
  require_symmetric(m.coalgebra.ctx, "comodule side conversion");
  ExactMorphism c = braiding(m.coalgebra.ctx, m.coalgebra.obj, m.carrier);
  return LieComodule(m.coalgebra, m.carrier, -compose(c, m.coaction), Side::Right);
}

LieComodule to_left_comodule(const LieComodule& m) {
  if (m.side == Side::Left) return m;
  require_symmetric(m.coalgebra.ctx, "comodule side conversion");
  ExactMorphism c = braiding(m.coalgebra.ctx, m.carrier, m.coalgebra.obj);
  return LieComodule(m.coalgebra, m.carrier, -compose(c, m.coaction), Side::Left);
}

LieModule induce_module(const LieModule& m, const GradedObject& x) {
  if (m.side != Side::Right)
    throw ShapeError("induce_module expects a right module");
  const Field& f = m.algebra.ctx.field();
  GradedObject carrier = tensor(x, m.carrier);
  ExactMorphism a = associator(m.algebra.ctx, x, m.carrier, m.algebra.obj);
  ExactMorphism action =
      compose(tensor(ExactMorphism::identity(f, x), m.action), a);
  return LieModule(m.algebra, std::move(carrier), std::move(action), Side::Right);
}

HomSubspace lie_hom_space(const LieModule& m, const LieModule& n) {
  if (m.side != Side::Right || n.side != Side::Right)
    throw ShapeError("lie_hom_space expects right modules");
  if (m.algebra.ctx != n.algebra.ctx || m.algebra.obj != n.algebra.obj ||
      m.algebra.lambda != n.algebra.lambda || m.algebra.bracket != n.algebra.bracket)
    throw ShapeError("lie_hom_space: modules over different algebras");
  const Field& f = m.algebra.ctx.field();
  const GradedObject& l = m.algebra.obj;
  GradedObject h = hom_object(m.carrier, n.carrier);
  GradedObject ml = tensor(m.carrier, l);
  ExactMorphism id_h = ExactMorphism::identity(f, h);
  ExactMorphism eps = hom_counit(f, m.carrier, n.carrier);

  ExactMorphism one = curry(compose(eps, tensor(id_h, m.action)), h, ml);
  ExactMorphism a_inv = associator_inv(m.algebra.ctx, h, m.carrier, l);
  ExactMorphism two = curry(
      compose(n.action,
              compose(tensor(eps, ExactMorphism::identity(f, l)), a_inv)),
      h, ml);

  Matrix basis = kernel_basis((one - two).mat());
  GradedObject obj = basis.cols() == 0 ? GradedObject(std::vector<std::uint8_t>{})
                                       : column_degrees(basis, h);
  return {obj, ExactMorphism(obj, h, std::move(basis))};
}

YBLieAlgebra endo_lie_algebra(const CategoryContext& ctx, const GradedObject& x) {
  require_symmetric(ctx, "endo_lie_algebra");
  const Field& f = ctx.field();
  GradedObject h = hom_object(x, x);
  ExactMorphism eps = hom_counit(f, x, x);
  ExactMorphism comp = compose(eps, tensor(ExactMorphism::identity(f, h), eps));
  ExactMorphism mul = curry(comp, tensor(h, h), x);  // composition H (x) H -> H
  ExactMorphism c = braiding(ctx, h, h);
  return YBLieAlgebra(ctx, h, c, mul - compose(mul, c));
}

ExactMorphism module_to_representation(const LieModule& m) {
  require_symmetric(m.algebra.ctx, "module_to_representation");
  LieModule left = to_left_module(m);
  return curry(left.action, left.algebra.obj, left.carrier);
}

LieModule representation_to_module(const YBLieAlgebra& alg,
                                   const GradedObject& x,
                                   const ExactMorphism& phi) {
  require_symmetric(alg.ctx, "representation_to_module");
  ExactMorphism action = uncurry(phi, x, x);
  return LieModule(alg, x, std::move(action), Side::Left);
}

}  // namespace yblie
