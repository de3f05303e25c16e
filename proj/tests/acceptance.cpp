// Acceptance suite: every check is exact (no tolerances anywhere), and each
// numbered criterion prints one pass/fail line.  The process exits nonzero
// if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "yblie/errors.hpp"
#include "yblie/fixtures.hpp"
#include "yblie/hom.hpp"
#include "yblie/io.hpp"
#include "yblie/linalg.hpp"

using namespace yblie;
namespace fx = yblie::fixtures;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  std::string failure;  // empty = pass

  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<GradedObject> all_objects_up_to(std::size_t dim) {
  std::vector<GradedObject> out;
  for (std::size_t d = 1; d <= dim; ++d)
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<std::uint8_t> degs(d);
      for (std::size_t i = 0; i < d; ++i) degs[i] = (mask >> i) & 1;
      out.emplace_back(std::move(degs));
    }
  return out;
}

std::vector<GradedObject> duality_test_objects() {
  return {GradedObject::unit(), GradedObject::even(2), GradedObject::even(3),
          GradedObject(std::vector<std::uint8_t>{0, 1})};
}

// ---------------------------------------------------------------- criterion 1

void criterion_three_strand(Criterion& c) {
  Field q = Field::rational();
  for (BraidingFlavor flavor : {BraidingFlavor::Trivial, BraidingFlavor::Super}) {
    CategoryContext ctx(q, flavor, AssociatorFlavor::Trivial);
    for (const auto& l : all_objects_up_to(3)) {
      ThreeStrand tw = derive_t_w(braiding_operator(ctx, l));
      c.require(compose(tw.t, tw.t) == tw.w, "t o t = w");
      c.require(compose(tw.t, compose(tw.t, tw.t)).mat().is_identity(),
                "t o t o t = id");
    }
  }
  for (const YBOperator& op : {fx::any1(), fx::any1_gaussian()}) {
    ExactMorphism sq = compose(op.c, op.c);
    c.require(sq.mat().at(0, 0) == -Scalar::one(op.ctx.field()),
              "anyonic c o c = -id");
    c.require(!sq.mat().is_identity(), "anyonic c o c != id");
    c.require(check_yb_operator(op).find("yang_baxter")->pass,
              "anyonic braid relation");
  }
}

// ---------------------------------------------------------------- criterion 2

void expect_exact_failure(Criterion& c, const fs::path& file,
                          const std::string& axiom) {
  io::Structure s = io::parse_structure(slurp(file));
  CheckReport r = io::check_structure(s);
  for (const auto& a : r.axioms()) {
    if (a.name == axiom) {
      c.require(!a.pass, file.string() + ": " + axiom + " should fail");
      c.require(a.witness.has_value(), file.string() + ": witness missing");
    } else {
      c.require(a.pass, file.string() + ": unexpected failure of " + a.name);
    }
  }
}

void criterion_axiom_closure(Criterion& c, const fs::path& dir) {
  for (const char* name : {"ab2", "sl2", "gl2", "ext1", "kz2", "kz2d"}) {
    io::Structure s = io::parse_structure(slurp(dir / (std::string(name) + ".json")));
    CheckReport r = io::check_structure(s);
    c.require(r.all_pass(), std::string(name) + " should pass; first failure: " +
                                (r.all_pass() ? "" : r.failing().front()));
  }
  expect_exact_failure(c, dir / "sl2-broken.json", "jacobi");
  expect_exact_failure(c, dir / "ext1-broken.json", "hopf_compatibility");
  expect_exact_failure(c, dir / "sl2-pair-broken.json", "mich1");
  expect_exact_failure(c, dir / "sl2-module-broken.json", "action_law");
  expect_exact_failure(c, dir / "any1.json", "order_two");
}

// ---------------------------------------------------------------- criterion 3

void criterion_construction_soundness(Criterion& c) {
  YBLieAlgebra gl2 = commutator_lie(fx::m2());
  c.require(check_yb_lie_algebra(gl2).all_pass(), "commutator_lie(m2)");

  YBLieCoalgebra ckz2 = cocommutator_lie(fx::kz2().coalgebra_part());
  c.require(check_yb_lie_coalgebra(ckz2).all_pass(), "cocommutator_lie(kz2)");

  c.require(check_yb_lie_algebra(opposite(fx::sl2())).all_pass(), "opposite(sl2)");

  BraidedBialgebra ext1 = fx::ext1();
  Primitives p = primitives(ext1);
  c.require(check_yb_lie_algebra(p.lie).all_pass(), "primitives(ext1) checker");
  ExactMorphism eq2 = tensor(p.inclusion, p.inclusion);
  c.require(compose(eq2, p.lie.lambda) == compose(ext1.lambda, eq2),
            "lambda descent identity");
  c.require(compose(p.inclusion, p.lie.bracket) ==
                compose(ext1.commutator_bracket(), eq2),
            "bracket descent identity");
  c.require(check_morphism(p.inclusion, p.lie,
                           commutator_lie(ext1.algebra_part()))
                .all_pass(),
            "eq is a Lie algebra morphism");

  Indecomposables ind = indecomposables(ext1);
  c.require(check_yb_lie_coalgebra(ind.lie).all_pass(),
            "indecomposables(ext1) checker");
  ExactMorphism coeq2 = tensor(ind.projection, ind.projection);
  c.require(compose(ind.lie.gamma, coeq2) == compose(coeq2, ext1.lambda),
            "gamma descent identity");
  c.require(compose(ind.lie.cobracket, ind.projection) ==
                compose(coeq2, ext1.cocommutator()),
            "cobracket descent identity");
  c.require(check_comorphism(ind.projection,
                             cocommutator_lie(ext1.coalgebra_part()), ind.lie)
                .all_pass(),
            "coeq is a Lie coalgebra morphism");

  c.require(check_michaelis_pair(dual_pair(fx::sl2())).all_pass(), "dual_pair(sl2)");
  c.require(check_michaelis_pair(dual_pair(fx::ab2())).all_pass(), "dual_pair(ab2)");

  // elementary_from_adjoint with an explicit non-dual basis: rescale the
  // pairing and its copairing coherently.
  YBLieAlgebra sl2 = fx::sl2();
  const Field& q = sl2.ctx.field();
  std::size_t n = 3;
  GradedObject cobj(sl2.obj.degrees());
  Matrix evm(q, 1, n * n), coevm(q, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    evm.set(0, i * n + i, Scalar::integer(q, 2));
    coevm.set(i * n + i, 0, Scalar::rational(Rational(BigInt(1), BigInt(2))));
  }
  MichaelisPair elem = elementary_from_adjoint(
      sl2, cobj, ExactMorphism(tensor(sl2.obj, cobj), GradedObject::unit(), evm),
      ExactMorphism(GradedObject::unit(), tensor(cobj, sl2.obj), coevm));
  c.require(check_michaelis_pair(elem).all_pass(), "elementary_from_adjoint");

  c.require(check_michaelis_pair(michaelis_from_takeuchi(fx::ext1_takeuchi()).pair)
                .all_pass(),
            "michaelis_from_takeuchi(ext1)");
}

// ---------------------------------------------------------------- criterion 4

void criterion_primitive_values(Criterion& c) {
  Primitives p = primitives(fx::ext1());
  c.require(p.obj.dim() == 1, "dim P(ext1) = 1");
  c.require(p.obj.dim() == 1 && p.obj.degree(0) == 1, "P(ext1) odd");
  c.require(p.lie.bracket.mat().is_zero(), "P(ext1) bracket = 0");
  c.require(p.lie.lambda.mat().rows() == 1 &&
                p.lie.lambda.mat().at(0, 0) == -Scalar::one(Field::rational()),
            "lambda_P = [[-1]]");

  Indecomposables ind = indecomposables(fx::ext1());
  c.require(ind.obj.dim() == 1 && ind.obj.degree(0) == 1, "Q(ext1) odd line");
  c.require(ind.lie.cobracket.mat().is_zero(), "Q(ext1) cobracket = 0");

  c.require(primitives(fx::kz2()).obj.dim() == 0, "P(kz2) = 0");
  c.require(indecomposables(fx::kz2()).obj.dim() == 0, "Q(kz2) = 0");

  // Independent Gaussian-elimination oracles, assembled entry by entry.
  BraidedBialgebra h = fx::ext1();
  const Field& q = h.ctx.field();
  {
    Matrix system(q, 4, 2);
    for (std::size_t r = 0; r < 4; ++r) {
      std::size_t i = r / 2, j = r % 2;
      for (std::size_t col = 0; col < 2; ++col) {
        Scalar v = h.comul.mat().at(r, col);
        if (i == 0 && j == col) v -= Scalar::one(q);  // eta (x) id
        if (j == 0 && i == col) v -= Scalar::one(q);  // id (x) eta
        system.set(r, col, v);
      }
    }
    Matrix oracle = kernel_basis(system);
    c.require(oracle.cols() == 1, "oracle: dim P(ext1)");
    c.require(oracle == p.inclusion.mat(), "oracle: P(ext1) basis matches");
  }
  {
    Matrix diff(q, 2, 4);
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t r = 0; r < 4; ++r) {
        std::size_t i = r / 2, j = r % 2;
        Scalar v = h.mul.mat().at(k, r);
        if (j == k) v -= h.counit.mat().at(0, i);
        if (i == k) v -= h.counit.mat().at(0, j);
        diff.set(k, r, v);
      }
    c.require(cokernel_projection(diff) == ind.projection.mat(),
              "oracle: Q(ext1) projection matches");
  }
  {
    BraidedBialgebra g = fx::kz2();
    Matrix system(q, 4, 2);
    for (std::size_t r = 0; r < 4; ++r) {
      std::size_t i = r / 2, j = r % 2;
      for (std::size_t col = 0; col < 2; ++col) {
        Scalar v = g.comul.mat().at(r, col);
        if (i == 0 && j == col) v -= Scalar::one(q);
        if (j == 0 && i == col) v -= Scalar::one(q);
        system.set(r, col, v);
      }
    }
    c.require(kernel_basis(system).cols() == 0, "oracle: P(kz2) = 0");
  }
}

// ---------------------------------------------------------------- criterion 5

void criterion_duality_round_trips(Criterion& c) {
  MichaelisPair sl2p = fx::sl2_pair();
  MichaelisPair ext1p = michaelis_from_takeuchi(fx::ext1_takeuchi()).pair;
  for (const MichaelisPair& p : {sl2p, ext1p}) {
    ExactMorphism zi = zeta_at(p, GradedObject::unit());
    c.require(ev_from_zeta(p.lie, p.colie, zi) == p.ev, "beta(alpha(ev)) = ev");

    ExactMorphism rebuilt_ev = ev_from_zeta(p.lie, p.colie, zi);
    MichaelisPair rebuilt(p.lie, p.colie, rebuilt_ev);
    for (const GradedObject& x : duality_test_objects()) {
      c.require(zeta_at(rebuilt, x) == zeta_at(p, x),
                "alpha(beta(zeta)) reproduces zeta");
      c.require(check_zeta_monad_morphism(p, x).all_pass(),
                "zeta is a Lie monad morphism");
    }
  }
}

// ---------------------------------------------------------------- criterion 6

void criterion_strong_pair(Criterion& c) {
  MichaelisPair p = fx::sl2_pair();
  StrongPairWitness w = strengthen(p);
  for (const GradedObject& x : duality_test_objects()) {
    ExactMorphism z = zeta_at(p, x);
    ExactMorphism xi = xi_at(p, w, x);
    c.require(compose(z, xi).mat().is_identity(), "zeta o xi = id");
    c.require(compose(xi, z).mat().is_identity(), "xi o zeta = id");
  }

  LieModule adj = to_left_module(fx::sl2_adjoint());
  LieModule ind = to_left_module(induce_module(fx::sl2_adjoint(), GradedObject::even(2)));
  for (const LieModule& m : {adj, ind}) {
    LieComodule g = module_to_comodule(p, w, m);
    c.require(comodule_to_module(p, g).action == m.action, "F(G(m)) = m");
  }
  LieComodule n = module_to_comodule(p, w, adj);
  LieComodule gf = module_to_comodule(p, w, comodule_to_module(p, n));
  c.require(gf.coaction == n.coaction, "G(F(n)) = n");

  bool rejected = false;
  try {
    strengthen(fx::ab2_zero_ev_pair());
  } catch (const NotStrong&) {
    rejected = true;
  }
  c.require(rejected, "strengthen rejects the zero pairing");
}

// ---------------------------------------------------------------- criterion 7

void criterion_takeuchi(Criterion& c) {
  for (const TakeuchiPair& t : {fx::ext1_takeuchi(), fx::kz2_takeuchi()}) {
    CheckReport r = check_takeuchi(t);
    c.require(r.all_pass(), "takeuchi pair passes; first failure: " +
                                (r.all_pass() ? "" : r.failing().front()));
    for (const char* name : {"a", "b", "c", "d", "e", "commutator_identity"})
      c.require(r.find(name) != nullptr, std::string("entry ") + name);
  }

  TakeuchiDescent d = michaelis_from_takeuchi(fx::ext1_takeuchi());
  c.require(d.pair.ev.mat().rows() == 1 && d.pair.ev.mat().cols() == 1 &&
                d.pair.ev.mat().at(0, 0).is_one(),
            "descended ev = [[1]]");

  TakeuchiPair t = fx::ext1_takeuchi();
  BialgebraComodule regular{t.k.obj, t.k.comul};
  c.require(check_square(t, regular).all_pass(), "square on the regular comodule");

  const Field& q = t.k.ctx.field();
  GradedObject m = GradedObject::even(2);
  ExactMorphism delta = tensor(t.k.unit, ExactMorphism::identity(q, m));
  BialgebraComodule triv{m, ExactMorphism(m, tensor(t.k.obj, m), delta.mat())};
  c.require(check_square(t, triv).all_pass(), "square on the trivial comodule");
}

// ---------------------------------------------------------------- criterion 8

void criterion_hom_coherence(Criterion& c) {
  Field q = Field::rational();
  for (std::size_t dx = 1; dx <= 3; ++dx)
    for (std::size_t dy = 1; dy <= 3; ++dy)
      for (std::size_t dz = 1; dz <= 3; ++dz) {
        GradedObject x = GradedObject::even(dx);
        GradedObject y = GradedObject::even(dy);
        GradedObject z = GradedObject::even(dz);
        ExactMorphism pi = pi_internal(q, x, y, z);
        c.require(pi == pi_from_unit_counit(q, x, y, z),
                  "Pi equals the unit/counit composite");
        ExactMorphism pinv = pi_internal_inv(q, x, y, z);
        c.require(pinv == pi_inv_from_unit_counit(q, x, y, z),
                  "Pi^-1 equals the unit/counit composite");
        c.require(compose(pi, pinv).mat().is_identity() &&
                      compose(pinv, pi).mat().is_identity(),
                  "Pi o Pi^-1 = id");
      }

  LieModule adj = fx::sl2_adjoint();
  HomSubspace lh = lie_hom_space(adj, adj);
  c.require(lh.obj.dim() == 1, "dim LH(adjoint, adjoint) = 1");

  // Brute-force commutant oracle.
  const Field& f = adj.algebra.ctx.field();
  auto bracket = [&](std::size_t i, std::size_t j, std::size_t k) {
    return adj.algebra.bracket.mat().at(k, i * 3 + j);
  };
  Matrix system(f, 27, 9);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k, ++row)
        for (std::size_t p = 0; p < 3; ++p) {
          Scalar cur = system.at(row, k * 3 + p);
          system.set(row, k * 3 + p, cur + bracket(i, j, p));
          cur = system.at(row, p * 3 + i);
          system.set(row, p * 3 + i, cur - bracket(p, j, k));
        }
  Matrix oracle = kernel_basis(system);
  c.require(oracle.cols() == 1, "oracle commutant dimension");
  c.require(oracle == lh.inclusion.mat(), "LH matches the brute-force commutant");
}

// ---------------------------------------------------------------- criterion 9

void criterion_determinism(Criterion& c, const fs::path& dir) {
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::string bytes = slurp(entry.path());
    io::Structure s = io::parse_structure(bytes);
    c.require(io::write_structure(s) == bytes,
              entry.path().filename().string() + " round-trips bit-exactly");
  }

  // Repeated construction runs are byte-identical.
  auto once = [] {
    return io::write_structure(io::Structure(primitives(fx::ext1()).lie));
  };
  c.require(once() == once(), "repeated primitives runs agree");
  auto pair_once = [] {
    return io::write_structure(io::Structure(dual_pair(fx::sl2())));
  };
  c.require(pair_once() == pair_once(), "repeated dual_pair runs agree");
  auto tak_once = [] {
    return io::write_structure(
        io::Structure(michaelis_from_takeuchi(fx::ext1_takeuchi()).pair));
  };
  c.require(tak_once() == tak_once(), "repeated descent runs agree");
}

}  // namespace

int main() {
  fs::path dir = YBLIE_FIXTURE_DIR;
  struct Entry {
    const char* label;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> criteria = {
      {"1 three-strand lemma and the anyonic counterexample",
       [&](Criterion& c) { criterion_three_strand(c); }},
      {"2 axiom closure of fixtures and exact broken-variant failures",
       [&](Criterion& c) { criterion_axiom_closure(c, dir); }},
      {"3 construction soundness with descent identities",
       [&](Criterion& c) { criterion_construction_soundness(c); }},
      {"4 primitives/indecomposables values vs elimination oracles",
       [&](Criterion& c) { criterion_primitive_values(c); }},
      {"5 duality round trips and the monad-morphism identities",
       [&](Criterion& c) { criterion_duality_round_trips(c); }},
      {"6 strong-pair equivalences",
       [&](Criterion& c) { criterion_strong_pair(c); }},
      {"7 takeuchi suite and the module-category square",
       [&](Criterion& c) { criterion_takeuchi(c); }},
      {"8 internal-hom coherence and the hom-space oracle",
       [&](Criterion& c) { criterion_hom_coherence(c); }},
      {"9 determinism and bit-exact round trips",
       [&](Criterion& c) { criterion_determinism(c, dir); }},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << (c.failure.empty() ? "[PASS]" : "[FAIL]") << " criterion "
              << entry.label << "  (" << std::fixed << std::setprecision(2)
              << secs << "s)";
    if (!c.failure.empty()) {
      std::cout << " -- " << c.failure;
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
