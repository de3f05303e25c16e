#include "yblie/fixtures.hpp"

namespace yblie::fixtures {

namespace {

Matrix from_entries(const Field& f, std::size_t rows, std::size_t cols,
                    std::initializer_list<std::tuple<std::size_t, std::size_t, std::int64_t>> entries) {
  Matrix m(f, rows, cols);
  for (const auto& [i, j, v] : entries) m.set(i, j, Scalar::integer(f, v));
  return m;
}

CategoryContext q_trivial() { return CategoryContext::trivial(Field::rational()); }
CategoryContext q_super() { return CategoryContext::super(Field::rational()); }

}  // namespace

YBLieAlgebra ab2() {
  CategoryContext ctx = q_trivial();
  GradedObject l = GradedObject::even(2);
  return YBLieAlgebra(ctx, l, braiding(ctx, l, l),
                      ExactMorphism::zero(ctx.field(), tensor(l, l), l));
}

YBLieAlgebra sl2() {
  CategoryContext ctx = q_trivial();
  GradedObject l = GradedObject::even(3);
  // Basis order (e, h, f); columns in Kronecker order i*3+j.
  Matrix bracket = from_entries(ctx.field(), 3, 9,
                                {{1, 2, 1},    // [e,f] = h
                                 {1, 6, -1},   // [f,e] = -h
                                 {0, 3, 2},    // [h,e] = 2e
                                 {0, 1, -2},   // [e,h] = -2e
                                 {2, 5, -2},   // [h,f] = -2f
                                 {2, 7, 2}});  // [f,h] = 2f
  return YBLieAlgebra(ctx, l, braiding(ctx, l, l),
                      ExactMorphism(tensor(l, l), l, std::move(bracket)));
}

YBAlgebra m2() {
  CategoryContext ctx = q_trivial();
  GradedObject b = GradedObject::even(4);
  // Basis (E11, E12, E21, E22); E_{ab} E_{cd} = delta_{bc} E_{ad}.
  Matrix mul(ctx.field(), 4, 16);
  auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          if (b == c)
            mul.set(idx(a, d), idx(a, b) * 4 + idx(c, d), Scalar::one(ctx.field()));
  Matrix unit(ctx.field(), 4, 1);
  unit.set(0, 0, Scalar::one(ctx.field()));
  unit.set(3, 0, Scalar::one(ctx.field()));
  return YBAlgebra(ctx, b, ExactMorphism(tensor(b, b), b, std::move(mul)),
                   braiding(ctx, b, b),
                   ExactMorphism(GradedObject::unit(), b, std::move(unit)));
}

AlgebraModule m2_column_module() {
  YBAlgebra b = m2();
  GradedObject v = GradedObject::even(2);
  // Row vectors: e_c . E_{ab} = delta_{ca} e_b.
  Matrix act(b.ctx.field(), 2, 8);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t d = 0; d < 2; ++d)
        if (c == a)
          act.set(d, c * 4 + (a * 2 + d), Scalar::one(b.ctx.field()));
  return AlgebraModule(b, v, ExactMorphism(tensor(v, b.obj), v, std::move(act)),
                       Side::Right);
}

YBLieAlgebra gl2() { return commutator_lie(m2()); }

BraidedBialgebra ext1() {
  CategoryContext ctx = q_super();
  const Field& f = ctx.field();
  GradedObject h(std::vector<std::uint8_t>{0, 1});  // (1, x)
  Matrix mul = from_entries(f, 2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}});
  Matrix unit = from_entries(f, 2, 1, {{0, 0, 1}});
  Matrix comul = from_entries(f, 4, 2, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}});
  Matrix counit = from_entries(f, 1, 2, {{0, 0, 1}});
  return BraidedBialgebra(ctx, h,
                          ExactMorphism(tensor(h, h), h, std::move(mul)),
                          ExactMorphism(GradedObject::unit(), h, std::move(unit)),
                          ExactMorphism(h, tensor(h, h), std::move(comul)),
                          ExactMorphism(h, GradedObject::unit(), std::move(counit)),
                          braiding(ctx, h, h));
}

BraidedBialgebra kz2() {
  CategoryContext ctx = q_trivial();
  const Field& f = ctx.field();
  GradedObject h = GradedObject::even(2);  // (1, g)
  Matrix mul = from_entries(f, 2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {0, 3, 1}});
  Matrix unit = from_entries(f, 2, 1, {{0, 0, 1}});
  Matrix comul = from_entries(f, 4, 2, {{0, 0, 1}, {3, 1, 1}});
  Matrix counit = from_entries(f, 1, 2, {{0, 0, 1}, {0, 1, 1}});
  return BraidedBialgebra(ctx, h,
                          ExactMorphism(tensor(h, h), h, std::move(mul)),
                          ExactMorphism(GradedObject::unit(), h, std::move(unit)),
                          ExactMorphism(h, tensor(h, h), std::move(comul)),
                          ExactMorphism(h, GradedObject::unit(), std::move(counit)),
                          braiding(ctx, h, h));
}

BraidedBialgebra kz2d() {
  CategoryContext ctx = q_trivial();
  const Field& f = ctx.field();
  GradedObject h = GradedObject::even(2);  // (delta_1, delta_g)
  Matrix mul = from_entries(f, 2, 4, {{0, 0, 1}, {1, 3, 1}});
  Matrix unit = from_entries(f, 2, 1, {{0, 0, 1}, {1, 0, 1}});
  Matrix comul = from_entries(f, 4, 2, {{0, 0, 1}, {3, 0, 1}, {1, 1, 1}, {2, 1, 1}});
  Matrix counit = from_entries(f, 1, 2, {{0, 0, 1}});
  return BraidedBialgebra(ctx, h,
                          ExactMorphism(tensor(h, h), h, std::move(mul)),
                          ExactMorphism(GradedObject::unit(), h, std::move(unit)),
                          ExactMorphism(h, tensor(h, h), std::move(comul)),
                          ExactMorphism(h, GradedObject::unit(), std::move(counit)),
                          braiding(ctx, h, h));
}

YBOperator any1() {
  Field f = Field::prime(5);
  CategoryContext ctx(f, BraidingFlavor::Anyonic, AssociatorFlavor::Sign,
                      Scalar::prime(f, 2));
  GradedObject l(std::vector<std::uint8_t>{1});
  return braiding_operator(ctx, l);
}

YBOperator any1_gaussian() {
  CategoryContext ctx(Field::gaussian(), BraidingFlavor::Anyonic,
                      AssociatorFlavor::Sign);
  GradedObject l(std::vector<std::uint8_t>{1});
  return braiding_operator(ctx, l);
}

LieModule sl2_adjoint() {
  YBLieAlgebra l = sl2();
  return LieModule(l, l.obj, l.bracket, Side::Right);
}

MichaelisPair sl2_pair() { return dual_pair(sl2()); }

MichaelisPair ab2_zero_ev_pair() {
  MichaelisPair p = dual_pair(ab2());
  ExactMorphism zero_ev = ExactMorphism::zero(
      p.lie.ctx.field(), tensor(p.lie.obj, p.colie.obj), GradedObject::unit());
  return MichaelisPair(p.lie, p.colie, std::move(zero_ev));
}

TakeuchiPair ext1_takeuchi() {
  BraidedBialgebra h = ext1();
  Matrix d = from_entries(h.ctx.field(), 1, 4, {{0, 0, 1}, {0, 3, 1}});
  return TakeuchiPair(h, h,
                      ExactMorphism(tensor(h.obj, h.obj), GradedObject::unit(),
                                    std::move(d)));
}

TakeuchiPair kz2_takeuchi() {
  BraidedBialgebra h = kz2d();
  BraidedBialgebra k = kz2();
  Matrix d = from_entries(h.ctx.field(), 1, 4, {{0, 0, 1}, {0, 3, 1}});
  return TakeuchiPair(h, k,
                      ExactMorphism(tensor(h.obj, k.obj), GradedObject::unit(),
                                    std::move(d)));
}

YBLieAlgebra sl2_broken() {
  YBLieAlgebra l = sl2();
  Matrix bracket = l.bracket.mat();
  bracket.set(0, 3, Scalar::integer(l.ctx.field(), 3));    // [h,e] = 3e
  bracket.set(0, 1, Scalar::integer(l.ctx.field(), -3));   // [e,h] = -3e
  return YBLieAlgebra(l.ctx, l.obj, l.lambda,
                      ExactMorphism(tensor(l.obj, l.obj), l.obj, std::move(bracket)));
}

BraidedBialgebra ext1_broken() {
  BraidedBialgebra h = ext1();
  CategoryContext plain = q_trivial();
  // The plain swap on the same graded object, in the super context.
  ExactMorphism swap = braiding(plain, h.obj, h.obj);
  return BraidedBialgebra(h.ctx, h.obj, h.mul, h.unit, h.comul, h.counit,
                          ExactMorphism(swap.source(), swap.target(), swap.mat()));
}

MichaelisPair sl2_pair_broken() {
  MichaelisPair p = sl2_pair();
  Matrix ev = p.ev.mat();
  ev.set(0, 2 * 3 + 2, Scalar::integer(p.lie.ctx.field(), 2));  // <f, f*> = 2
  return MichaelisPair(p.lie, p.colie,
                       ExactMorphism(p.ev.source(), p.ev.target(), std::move(ev)));
}

LieModule sl2_module_broken() {
  YBLieAlgebra l = sl2();
  ExactMorphism doubled(tensor(l.obj, l.obj), l.obj,
                        l.bracket.mat().scaled(Scalar::integer(l.ctx.field(), 2)));
  return LieModule(l, l.obj, std::move(doubled), Side::Right);
}

}  // namespace yblie::fixtures
