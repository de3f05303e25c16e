#include "yblie/duality.hpp"

#include <utility>

#include "yblie/errors.hpp"
#include "yblie/hom.hpp"
#include "yblie/linalg.hpp"

namespace yblie {

namespace {

void require_strict(const CategoryContext& ctx, const char* what) {
  if (ctx.associator_flavor() != AssociatorFlavor::Trivial)
    throw InvalidInput(std::string(what) +
                       " is defined in strict contexts only (trivial associator)");
}

ExactMorphism id_of(const CategoryContext& ctx, const GradedObject& x) {
  return ExactMorphism::identity(ctx.field(), x);
}

}  // namespace

MichaelisPair::MichaelisPair(YBLieAlgebra l, YBLieCoalgebra c, ExactMorphism pairing)
    : lie(std::move(l)), colie(std::move(c)), ev(std::move(pairing)) {
  if (lie.ctx != colie.ctx)
    throw ShapeError("Michaelis pair across different contexts");
  require_strict(lie.ctx, "a Michaelis pair");
  if (ev.source() != tensor(lie.obj, colie.obj) ||
      ev.target() != GradedObject::unit())
    throw ShapeError("ev must map L tensor C to the unit object");
}

CheckReport check_michaelis_pair(const MichaelisPair& p) {
  CheckReport report;
  report.merge("algebra", check_yb_lie_algebra(p.lie));
  report.merge("coalgebra", check_yb_lie_coalgebra(p.colie));

  const CategoryContext& ctx = p.lie.ctx;
  ExactMorphism id_l = id_of(ctx, p.lie.obj);
  ExactMorphism id_c = id_of(ctx, p.colie.obj);
  // ev2 = ev o (L (x) ev (x) C) : L L C C -> I.
  ExactMorphism ev2 = compose(p.ev, tensor(id_l, tensor(p.ev, id_c)));

  ExactMorphism mich1_lhs =
      compose(ev2, tensor(id_l, tensor(id_l, p.colie.cobracket)));
  ExactMorphism mich1_rhs = compose(p.ev, tensor(p.lie.bracket, id_c));
  report.require_equal("mich1", mich1_lhs, mich1_rhs);

  ExactMorphism id_cc = id_of(ctx, tensor(p.colie.obj, p.colie.obj));
  ExactMorphism mich2_lhs =
      compose(ev2, tensor(id_l, tensor(id_l, p.colie.gamma)));
  ExactMorphism mich2_rhs = compose(ev2, tensor(p.lie.lambda, id_cc));
  report.require_equal("mich2", mich2_lhs, mich2_rhs);
  return report;
}

MichaelisPair elementary_from_adjoint(const YBLieAlgebra& l,
                                      const GradedObject& c_obj,
                                      const ExactMorphism& ev,
                                      const ExactMorphism& coev) {
  require_strict(l.ctx, "elementary_from_adjoint");
  CheckReport pre = check_yb_lie_algebra(l);
  if (!pre.all_pass())
    throw InvalidInput("elementary_from_adjoint: L fails its checker (" +
                       pre.failing().front() + ")");
  const CategoryContext& ctx = l.ctx;
  ExactMorphism id_l = id_of(ctx, l.obj);
  ExactMorphism id_c = id_of(ctx, c_obj);

  ExactMorphism snake_l =
      compose(compose(tensor(ev, id_l), tensor(id_l, coev)), id_l);
  if (snake_l != id_l)
    throw SnakeFailure("snake identity (ev (x) L) o (L (x) coev) = L fails");
  ExactMorphism snake_c = compose(tensor(id_c, ev), tensor(coev, id_c));
  if (snake_c != id_c)
    throw SnakeFailure("snake identity (C (x) ev) o (coev (x) C) = C fails");

  ExactMorphism coev2 = compose(tensor(id_c, tensor(coev, id_l)), coev);
  ExactMorphism ev2 = compose(ev, tensor(id_l, tensor(ev, id_c)));
  ExactMorphism id_cc = id_of(ctx, tensor(c_obj, c_obj));

  ExactMorphism gamma = compose(
      tensor(id_cc, ev2),
      compose(tensor(id_cc, tensor(l.lambda, id_cc)), tensor(coev2, id_cc)));
  ExactMorphism upsilon = compose(
      tensor(id_cc, ev),
      compose(tensor(id_cc, tensor(l.bracket, id_c)), tensor(coev2, id_c)));

  YBLieCoalgebra colie(ctx, c_obj, std::move(gamma), std::move(upsilon));
  MichaelisPair pair(l, std::move(colie), ev);
  CheckReport post = check_michaelis_pair(pair);
  if (!post.all_pass())
    throw InternalCheckFailure("elementary pair failed its checker: " +
                               post.failing().front());
  return pair;
}

MichaelisPair dual_pair(const YBLieAlgebra& l) {
  const Field& f = l.ctx.field();
  std::size_t n = l.obj.dim();
  GradedObject c(l.obj.degrees());

  Matrix ev_m(f, 1, n * n);
  Matrix coev_m(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    ev_m.set(0, i * n + i, Scalar::one(f));
    coev_m.set(i * n + i, 0, Scalar::one(f));
  }
  ExactMorphism ev(tensor(l.obj, c), GradedObject::unit(), std::move(ev_m));
  ExactMorphism coev(GradedObject::unit(), tensor(c, l.obj), std::move(coev_m));
  MichaelisPair pair = elementary_from_adjoint(l, c, ev, coev);

  // Closed forms under the dual basis: Upsilon[(i,j)][m] = bracket[m][(j,i)]
  // and gamma[(i,j)][(m,n)] = lambda[(n,m)][(j,i)].
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        if (pair.colie.cobracket.mat().at(i * n + j, m) !=
            l.bracket.mat().at(m, j * n + i))
          throw InternalCheckFailure("dual_pair: cobracket is not the bracket transpose");
        for (std::size_t k = 0; k < n; ++k)
          if (pair.colie.gamma.mat().at(i * n + j, m * n + k) !=
              l.lambda.mat().at(k * n + m, j * n + i))
            throw InternalCheckFailure("dual_pair: gamma is not the lambda transpose");
      }
    }
  return pair;
}

StrongPairWitness strengthen(const MichaelisPair& p) {
  CheckReport pre = check_michaelis_pair(p);
  if (!pre.all_pass())
    throw InvalidInput("strengthen: pair fails its checker (" +
                       pre.failing().front() + ")");
  const Field& f = p.lie.ctx.field();
  std::size_t nl = p.lie.obj.dim();
  std::size_t nc = p.colie.obj.dim();
  if (nl != nc)
    throw NotStrong("pairing is not square: dim L = " + std::to_string(nl) +
                    ", dim C = " + std::to_string(nc));
  Matrix gram(f, nl, nc);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      gram.set(i, j, p.ev.mat().at(0, i * nc + j));
  Matrix ginv;
  try {
    ginv = invert(gram);
  } catch (const Singular&) {
    throw NotStrong("Gram matrix of the pairing is singular");
  }
  Matrix coev_m(f, nc * nl, 1);
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t k = 0; k < nl; ++k)
      if (!ginv.at(j, k).is_zero()) coev_m.set(j * nl + k, 0, ginv.at(j, k));
  ExactMorphism coev(GradedObject::unit(), tensor(p.colie.obj, p.lie.obj),
                     std::move(coev_m));

  ExactMorphism id_l = id_of(p.lie.ctx, p.lie.obj);
  ExactMorphism id_c = id_of(p.lie.ctx, p.colie.obj);
  if (compose(tensor(p.ev, id_l), tensor(id_l, coev)) != id_l ||
      compose(tensor(id_c, p.ev), tensor(coev, id_c)) != id_c)
    throw InternalCheckFailure("strengthen: snake identities fail for the built coev");
  return {std::move(coev), std::move(gram)};
}

ExactMorphism zeta_at(const MichaelisPair& p, const GradedObject& x) {
  const Field& f = p.lie.ctx.field();
  ExactMorphism eta = hom_unit(f, p.colie.obj, tensor(x, p.lie.obj));
  ExactMorphism post = tensor(id_of(p.lie.ctx, x), p.ev);
  return compose(hom_map_post(post, p.colie.obj), eta);
}

ExactMorphism theta_at(const MichaelisPair& p, const GradedObject& x) {
  const Field& f = p.lie.ctx.field();
  ExactMorphism eta = hom_unit_right(f, p.lie.obj, tensor(p.colie.obj, x));
  ExactMorphism post = tensor(p.ev, id_of(p.lie.ctx, x));
  return compose(hom_map_post_right(post, p.lie.obj), eta);
}

ExactMorphism xi_at(const MichaelisPair& p, const StrongPairWitness& w,
                    const GradedObject& x) {
  const Field& f = p.lie.ctx.field();
  GradedObject h = hom_object(p.colie.obj, x);
  ExactMorphism eps = hom_counit(f, p.colie.obj, x);
  return compose(tensor(eps, id_of(p.lie.ctx, p.lie.obj)),
                 tensor(ExactMorphism::identity(f, h), w.coev));
}

ExactMorphism ev_from_zeta(const YBLieAlgebra& l, const YBLieCoalgebra& c,
                           const ExactMorphism& zeta_i) {
  const Field& f = l.ctx.field();
  if (zeta_i.source() != l.obj ||
      zeta_i.target() != hom_object(c.obj, GradedObject::unit()))
    throw ShapeError("ev_from_zeta: zeta_I must map L to H(C,I)");
  ExactMorphism eps = hom_counit(f, c.obj, GradedObject::unit());
  return compose(eps, tensor(zeta_i, id_of(l.ctx, c.obj)));
}

ExactMorphism ev_from_theta(const YBLieAlgebra& l, const YBLieCoalgebra& c,
                            const ExactMorphism& theta_i) {
  const Field& f = l.ctx.field();
  if (theta_i.source() != c.obj ||
      theta_i.target() != hom_object(l.obj, GradedObject::unit()))
    throw ShapeError("ev_from_theta: theta_I must map C to H'(L,I)");
  ExactMorphism eps = hom_counit_right(f, l.obj, GradedObject::unit());
  return compose(eps, tensor(id_of(l.ctx, l.obj), theta_i));
}

namespace {

HomMonadAt hom_monad_raw(const YBLieCoalgebra& c, const GradedObject& m) {
  const Field& f = c.ctx.field();
  ExactMorphism pi = pi_internal(f, c.obj, c.obj, m);
  ExactMorphism pi_inv = pi_internal_inv(f, c.obj, c.obj, m);
  ExactMorphism gamma_m =
      compose(pi, compose(hom_map_pre(c.gamma, m), pi_inv));
  ExactMorphism upsilon_m = compose(hom_map_pre(c.cobracket, m), pi_inv);
  return {std::move(gamma_m), std::move(upsilon_m)};
}

}  // namespace

HomMonadAt hom_monad_structure(const YBLieCoalgebra& c, const GradedObject& m) {
  require_strict(c.ctx, "hom_monad_structure");
  CheckReport pre = check_yb_lie_coalgebra(c);
  if (!pre.all_pass())
    throw InvalidInput("hom_monad_structure: C fails its checker (" +
                       pre.failing().front() + ")");
  const Field& f = c.ctx.field();
  HomMonadAt at_m = hom_monad_raw(c, m);
  GradedObject hm = hom_object(c.obj, m);
  HomMonadAt at_hm = hom_monad_raw(c, hm);

  // The evaluated horizontal composites: (phi * Id)_M = phi_{H(C,M)} and
  // (Id * phi)_M = H(C, phi_M).
  ExactMorphism inner_gamma = hom_map_post(at_m.gamma, c.obj);
  ExactMorphism inner_upsilon = hom_map_post(at_m.upsilon, c.obj);
  ExactMorphism t_bold = compose(at_hm.gamma, inner_gamma);
  ExactMorphism w_bold = compose(inner_gamma, at_hm.gamma);

  ExactMorphism id_hhm = ExactMorphism::identity(f, hom_object(c.obj, hm));
  if (!compose(at_m.upsilon, id_hhm + at_m.gamma).mat().is_zero())
    throw InternalCheckFailure("hom monad antisymmetry fails at M");

  GradedObject hhhm = hom_object(c.obj, hom_object(c.obj, hm));
  ExactMorphism id3 = ExactMorphism::identity(f, hhhm);
  ExactMorphism jac =
      compose(at_m.upsilon, compose(at_hm.upsilon, id3 + t_bold + w_bold));
  if (!jac.mat().is_zero())
    throw InternalCheckFailure("hom monad Jacobi identity fails at M");

  ExactMorphism compat_lhs = compose(at_m.gamma, inner_upsilon);
  ExactMorphism compat_rhs =
      compose(at_hm.upsilon, compose(inner_gamma, at_hm.gamma));
  if (compat_lhs != compat_rhs)
    throw InternalCheckFailure("hom monad compatibility fails at M");
  return at_m;
}

CheckReport check_zeta_monad_morphism(const MichaelisPair& p,
                                      const GradedObject& x) {
  const CategoryContext& ctx = p.lie.ctx;
  const GradedObject& l = p.lie.obj;
  GradedObject hx = hom_object(p.colie.obj, x);

  ExactMorphism zeta_x = zeta_at(p, x);
  ExactMorphism zeta_hx = zeta_at(p, hx);
  ExactMorphism star = compose(zeta_hx, tensor(zeta_x, id_of(ctx, l)));

  CheckReport report;
  // Horizontal composite is the same whichever leg goes first.
  ExactMorphism star_alt =
      compose(hom_map_post(zeta_x, p.colie.obj), zeta_at(p, tensor(x, l)));
  report.require_equal("star_well_defined", star, star_alt);

  HomMonadAt monad = hom_monad_structure(p.colie, x);
  ExactMorphism id_x = id_of(ctx, x);
  report.require_equal("upsilon_intertwine", compose(monad.upsilon, star),
                       compose(zeta_x, tensor(id_x, p.lie.bracket)));
  report.require_equal("gamma_intertwine", compose(monad.gamma, star),
                       compose(star, tensor(id_x, p.lie.lambda)));
  return report;
}

LieModule comodule_to_module(const MichaelisPair& p, const LieComodule& m) {
  if (m.side != Side::Left)
    throw ShapeError("comodule_to_module expects a left comodule");
  if (m.coalgebra.ctx != p.colie.ctx || m.coalgebra.obj != p.colie.obj ||
      m.coalgebra.gamma != p.colie.gamma ||
      m.coalgebra.cobracket != p.colie.cobracket)
    throw ShapeError("comodule is not over the pair's coalgebra");
  CheckReport pre = check_lie_comodule(m);
  if (!pre.all_pass())
    throw InvalidInput("comodule_to_module: comodule fails its checker (" +
                       pre.failing().front() + ")");
  ExactMorphism id_x = id_of(p.lie.ctx, m.carrier);
  ExactMorphism id_l = id_of(p.lie.ctx, p.lie.obj);
  ExactMorphism action =
      compose(tensor(p.ev, id_x), tensor(id_l, m.coaction));
  LieModule out(p.lie, m.carrier, std::move(action), Side::Left);
  CheckReport post = check_lie_module(out);
  if (!post.all_pass())
    throw InternalCheckFailure("comodule_to_module output failed its checker: " +
                               post.failing().front());
  return out;
}

LieComodule module_to_comodule(const MichaelisPair& p, const StrongPairWitness& w,
                               const LieModule& m) {
  if (m.side != Side::Left)
    throw ShapeError("module_to_comodule expects a left module");
  if (m.algebra.ctx != p.lie.ctx || m.algebra.obj != p.lie.obj ||
      m.algebra.lambda != p.lie.lambda || m.algebra.bracket != p.lie.bracket)
    throw ShapeError("module is not over the pair's algebra");
  CheckReport pre = check_lie_module(m);
  if (!pre.all_pass())
    throw InvalidInput("module_to_comodule: module fails its checker (" +
                       pre.failing().front() + ")");
  ExactMorphism id_x = id_of(p.lie.ctx, m.carrier);
  ExactMorphism id_c = id_of(p.lie.ctx, p.colie.obj);
  ExactMorphism coaction =
      compose(tensor(id_c, m.action), tensor(w.coev, id_x));
  LieComodule out(p.colie, m.carrier, std::move(coaction), Side::Left);
  CheckReport post = check_lie_comodule(out);
  if (!post.all_pass())
    throw InternalCheckFailure("module_to_comodule output failed its checker: " +
                               post.failing().front());
  return out;
}

TakeuchiPair::TakeuchiPair(BraidedBialgebra first, BraidedBialgebra second,
                           ExactMorphism diamond)
    : h(std::move(first)), k(std::move(second)), pairing(std::move(diamond)) {
  if (h.ctx != k.ctx) throw ShapeError("Takeuchi pair across different contexts");
  require_strict(h.ctx, "a Takeuchi pair");
  if (pairing.source() != tensor(h.obj, k.obj) ||
      pairing.target() != GradedObject::unit())
    throw ShapeError("pairing must map H tensor K to the unit object");
}

CheckReport check_takeuchi(const TakeuchiPair& t) {
  CheckReport report;
  report.merge("h", check_braided_bialgebra(t.h));
  report.merge("k", check_braided_bialgebra(t.k));

  const CategoryContext& ctx = t.h.ctx;
  ExactMorphism id_h = id_of(ctx, t.h.obj);
  ExactMorphism id_k = id_of(ctx, t.k.obj);
  ExactMorphism id_kk = id_of(ctx, tensor(t.k.obj, t.k.obj));
  ExactMorphism id_hh = id_of(ctx, tensor(t.h.obj, t.h.obj));
  // inner = H (x) pairing (x) K consumes the inner (H, K) pair.
  ExactMorphism inner = tensor(id_h, tensor(t.pairing, id_k));
  ExactMorphism nested = compose(t.pairing, inner);

  report.require_equal("a", compose(t.pairing, tensor(id_h, t.k.unit)), t.h.counit);
  report.require_equal("b", compose(t.pairing, tensor(t.h.unit, id_k)), t.k.counit);
  report.require_equal("c", compose(t.pairing, tensor(t.h.mul, id_k)),
                       compose(nested, tensor(id_h, tensor(id_h, t.k.comul))));
  report.require_equal("d", compose(t.pairing, tensor(id_h, t.k.mul)),
                       compose(nested, tensor(t.h.comul, id_kk)));
  report.require_equal("e", compose(nested, tensor(t.h.lambda, id_kk)),
                       compose(nested, tensor(id_hh, t.k.lambda)));
  report.require_equal(
      "commutator_identity",
      compose(t.pairing, tensor(t.h.commutator_bracket(), id_k)),
      compose(nested, tensor(id_hh, t.k.cocommutator())));
  return report;
}

TakeuchiDescent michaelis_from_takeuchi(const TakeuchiPair& t) {
  CheckReport pre = check_takeuchi(t);
  if (!pre.all_pass())
    throw InvalidInput("michaelis_from_takeuchi: pair fails its checker (" +
                       pre.failing().front() + ")");
  Primitives prim = primitives(t.h);
  Indecomposables indec = indecomposables(t.k);

  const CategoryContext& ctx = t.h.ctx;
  ExactMorphism id_p = id_of(ctx, prim.obj);
  ExactMorphism id_k = id_of(ctx, t.k.obj);
  ExactMorphism rhs = compose(t.pairing, tensor(prim.inclusion, id_k));
  ExactMorphism p_coeq = tensor(id_p, indec.projection);
  Matrix ev_m;
  try {
    ev_m = solve_through_epi(p_coeq.mat(), rhs.mat());
  } catch (const NoCofactorization&) {
    throw DescentFailure(
        "michaelis_from_takeuchi: the pairing does not descend along P (x) coeq");
  }
  ExactMorphism ev(tensor(prim.obj, indec.obj), GradedObject::unit(),
                   std::move(ev_m));
  if (compose(ev, p_coeq) != rhs)
    throw InternalCheckFailure("descended ev does not satisfy its defining identity");

  MichaelisPair pair(prim.lie, indec.lie, std::move(ev));
  CheckReport post = check_michaelis_pair(pair);
  if (!post.all_pass())
    throw InternalCheckFailure("michaelis_from_takeuchi output failed its checker: " +
                               post.failing().front());
  return {std::move(pair), std::move(prim), std::move(indec)};
}

CheckReport check_square(const TakeuchiPair& t, const BialgebraComodule& m) {
  CheckReport report;
  const CategoryContext& ctx = t.k.ctx;
  const Field& f = ctx.field();
  const GradedObject& kk = t.k.obj;
  ExactMorphism id_k = id_of(ctx, kk);
  ExactMorphism id_m = id_of(ctx, m.carrier);
  if (m.coaction.source() != m.carrier ||
      m.coaction.target() != tensor(kk, m.carrier))
    throw ShapeError("coaction must map M to K tensor M");

  report.require_equal("coassoc",
                       compose(tensor(id_k, m.coaction), m.coaction),
                       compose(tensor(t.k.comul, id_m), m.coaction));
  report.require_equal("counit",
                       compose(tensor(t.k.counit, id_m), m.coaction),
                       ExactMorphism::identity(f, m.carrier));
  if (!report.all_pass()) return report;  // rejected at the precondition

  TakeuchiDescent d = michaelis_from_takeuchi(t);
  ExactMorphism id_h = id_of(ctx, t.h.obj);
  ExactMorphism id_p = id_of(ctx, d.prim.obj);

  ExactMorphism rho_mh =
      compose(tensor(t.pairing, id_m), tensor(id_h, m.coaction));
  ExactMorphism via_h = compose(rho_mh, tensor(d.prim.inclusion, id_m));

  ExactMorphism delta_q = compose(tensor(d.indec.projection, id_m), m.coaction);
  ExactMorphism via_q = compose(tensor(d.pair.ev, id_m), tensor(id_p, delta_q));

  report.require_equal("square", via_h, via_q);

  LieModule module(d.prim.lie, m.carrier, via_h, Side::Left);
  report.merge("module", check_lie_module(module));
  return report;
}

}  // namespace yblie
