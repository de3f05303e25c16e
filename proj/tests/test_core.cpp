#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yblie/bigint.hpp"
#include "yblie/errors.hpp"
#include "yblie/linalg.hpp"
#include "yblie/scalar.hpp"

using namespace yblie;

namespace {

Matrix mat(const Field& f, std::size_t r, std::size_t c,
           std::initializer_list<std::int64_t> vals) {
  Matrix m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::integer(f, *it++));
  return m;
}

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t r,
                     std::size_t c) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, Scalar::integer(f, dist(rng)));
  return m;
}

}  // namespace

TEST_CASE("bigint small arithmetic agrees with native") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int k = 0; k < 300; ++k) {
    std::int64_t a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
  }
}

TEST_CASE("bigint survives the big-mode boundary") {
  // 2^100 forces limb arithmetic.
  BigInt two(2), pow(1);
  for (int i = 0; i < 100; ++i) pow = pow * two;
  CHECK(pow.to_string() == "1267650600228229401496703205376");
  CHECK(pow / BigInt(1024) * BigInt(1024) == pow);
  CHECK((pow + BigInt(1)) - pow == BigInt(1));
  CHECK(pow - pow == BigInt(0));
  CHECK((-pow).to_string() == "-1267650600228229401496703205376");
  CHECK(BigInt::from_string("1267650600228229401496703205376") == pow);
  CHECK(pow % BigInt(9999) == BigInt::from_string(pow.to_string()) % BigInt(9999));
  // Division with multi-limb divisor.
  BigInt q = pow / BigInt::from_string("1099511627776");  // 2^40
  BigInt expected(1);
  for (int i = 0; i < 60; ++i) expected = expected * two;
  CHECK(q == expected);
  CHECK(gcd(pow, expected) == expected);
}

TEST_CASE("bigint division: randomized multi-limb cross-check") {
  std::mt19937_64 rng(101);
  auto random_big = [&](int words) {
    BigInt v(1);
    for (int i = 0; i < words; ++i)
      v = v * BigInt(static_cast<std::int64_t>(rng() >> 1) + 3);
    return rng() & 1 ? -v : v;
  };
  for (int k = 0; k < 200; ++k) {
    BigInt a = random_big(1 + k % 5);
    BigInt b = random_big(1 + k % 3);
    BigInt q = a / b, r = a % b;
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK((r.is_zero() || r.sign() == a.sign()));
  }
  // Exact divisions land on the quotient with zero remainder.
  BigInt big = random_big(4).abs();
  BigInt factor = random_big(2).abs();
  CHECK((big * factor) / factor == big);
  CHECK(((big * factor) % factor).is_zero());
}

TEST_CASE("bigint division: adversarial limb patterns") {
  // All-ones dividends against divisors whose top limb sits at the
  // normalization boundary force the quotient-digit correction paths.
  auto pow2 = [](int bits) {
    BigInt v(1);
    for (int i = 0; i < bits; ++i) v = v * BigInt(2);
    return v;
  };
  BigInt ones256 = pow2(256) - BigInt(1);
  for (const BigInt& b : {pow2(128) + BigInt(1), pow2(128) - BigInt(1),
                          pow2(127) + BigInt(3), pow2(96) - BigInt(5),
                          pow2(64) + BigInt(1)}) {
    BigInt q = ones256 / b, r = ones256 % b;
    CHECK(q * b + r == ones256);
    CHECK(r < b);
    CHECK(r.sign() >= 0);
  }
  CHECK(pow2(192) / pow2(96) == pow2(96));
  CHECK((pow2(192) % pow2(96)).is_zero());
  CHECK((pow2(192) - BigInt(1)) / pow2(96) == pow2(96) - BigInt(1));
}

TEST_CASE("bigint addition near the small cap does not overflow") {
  BigInt cap = BigInt(std::int64_t{1} << 62);
  BigInt sum = cap + cap;
  CHECK(sum.to_string() == "9223372036854775808");  // 2^63
  CHECK(sum - cap == cap);
}

TEST_CASE("rationals are canonical and exact") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(4));
  CHECK(r.to_string() == "-3/4");
  CHECK(Rational::from_string("-3/4") == r);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Singular);

  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (int k = 0; k < 200; ++k) {
    Rational a(BigInt(dist(rng)), BigInt(dist(rng) * 2 + 1));
    Rational b(BigInt(dist(rng)), BigInt(dist(rng) * 2 + 1));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("scalar fields: gaussian and prime arithmetic") {
  Field g = Field::gaussian();
  Scalar i = Scalar::sqrt_minus_one(g);
  CHECK(i * i == -Scalar::one(g));
  Scalar z = Scalar::gaussian(Rational(1), Rational(2));
  CHECK((z * z.inverse()).is_one());
  CHECK(z.to_string() == "1+2i");
  CHECK(Scalar::parse(g, "1+2i") == z);
  CHECK(Scalar::parse(g, "-i") == -i);
  CHECK(Scalar::parse(g, "1/2-3/4i").to_string() == "1/2-3/4i");

  Field f5 = Field::prime(5);
  Scalar i5 = Scalar::sqrt_minus_one(f5);
  CHECK(i5 * i5 == -Scalar::one(f5));
  CHECK(Scalar::parse(f5, "-1") == Scalar::integer(f5, 4));
  for (std::uint64_t v = 1; v < 5; ++v)
    CHECK((Scalar::prime(f5, v) * Scalar::prime(f5, v).inverse()).is_one());
  CHECK_THROWS_AS(Field::prime(9), ParseError);
  CHECK_THROWS_AS(Field::prime(2), ParseError);
  CHECK_THROWS_AS(Scalar::sqrt_minus_one(Field::rational()), MissingRootOfUnity);
  CHECK_THROWS_AS(Scalar::sqrt_minus_one(Field::prime(7)), MissingRootOfUnity);
  CHECK_THROWS_AS(Scalar::one(g) + Scalar::one(f5), FieldMismatch);
}

TEST_CASE("kron identities") {
  Field q = Field::rational();
  CHECK(kron(Matrix::identity(q, 2), Matrix::identity(q, 3)) ==
        Matrix::identity(q, 6));
  CHECK(kron(mat(q, 1, 1, {2}), mat(q, 1, 1, {3})) == mat(q, 1, 1, {6}));

  // swap of two 2-dimensional factors, tensored with I2, squares to I8.
  Matrix swap4(q, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      swap4.set(j * 2 + i, i * 2 + j, Scalar::one(q));
  Matrix s = kron(swap4, Matrix::identity(q, 2));
  CHECK(s * s == Matrix::identity(q, 8));

  CHECK_THROWS_AS(kron(Matrix::identity(q, 2), Matrix::identity(Field::prime(5), 2)),
                  FieldMismatch);
}

TEST_CASE("kron is functorial on random small matrices") {
  std::mt19937 rng(23);
  for (const Field& f : {Field::rational(), Field::prime(7)}) {
    for (int k = 0; k < 25; ++k) {
      Matrix a = random_matrix(rng, f, 2, 3), b = random_matrix(rng, f, 3, 2);
      Matrix c = random_matrix(rng, f, 2, 2), d = random_matrix(rng, f, 2, 3);
      CHECK(kron(a * b, c * d) == kron(a, c) * kron(b, d));
    }
  }
}

TEST_CASE("kernel_basis canonical examples") {
  Field q = Field::rational();
  Matrix k1 = kernel_basis(Matrix::identity(q, 3));
  CHECK(k1.rows() == 3);
  CHECK(k1.cols() == 0);
  CHECK(kernel_basis(Matrix::zero(q, 2, 2)) == Matrix::identity(q, 2));
  CHECK(kernel_basis(mat(q, 1, 2, {1, -1})) == mat(q, 2, 1, {1, 1}));
}

TEST_CASE("cokernel_projection canonical examples") {
  Field q = Field::rational();
  Matrix c1 = cokernel_projection(Matrix::identity(q, 2));
  CHECK(c1.rows() == 0);
  CHECK(c1.cols() == 2);
  CHECK(cokernel_projection(Matrix::zero(q, 2, 2)) == Matrix::identity(q, 2));
  CHECK(cokernel_projection(mat(q, 2, 1, {1, 1})) == mat(q, 1, 2, {1, -1}));
}

TEST_CASE("kernel/cokernel exactness on random matrices") {
  std::mt19937 rng(37);
  for (const Field& f : {Field::rational(), Field::prime(11)}) {
    for (int k = 0; k < 30; ++k) {
      std::size_t r = 1 + k % 4, c = 1 + (k / 4) % 4;
      Matrix a = random_matrix(rng, f, r, c);
      Matrix ker = kernel_basis(a);
      Matrix coker = cokernel_projection(a);
      CHECK(ker.cols() + rank(a) == a.cols());
      CHECK(coker.rows() == a.rows() - rank(a));
      CHECK((a * ker).is_zero());
      CHECK((coker * a).is_zero());
      CHECK(rank(coker) == coker.rows());
      // Repeated runs are bit-identical.
      CHECK(kernel_basis(a) == ker);
      CHECK(cokernel_projection(a) == coker);
    }
  }
}

TEST_CASE("solve_through_mono") {
  Field q = Field::rational();
  Matrix f = mat(q, 2, 2, {1, 2, 3, 4});
  CHECK(solve_through_mono(Matrix::identity(q, 2), f) == f);
  CHECK(solve_through_mono(mat(q, 2, 1, {1, 0}), mat(q, 2, 1, {3, 0})) ==
        mat(q, 1, 1, {3}));
  CHECK_THROWS_AS(solve_through_mono(mat(q, 2, 1, {1, 0}), mat(q, 2, 1, {0, 1})),
                  NoFactorization);
  CHECK_THROWS_AS(solve_through_mono(mat(q, 2, 2, {1, 1, 1, 1}), f), ShapeError);

  std::mt19937 rng(53);
  for (int k = 0; k < 20; ++k) {
    Matrix m = random_matrix(rng, q, 4, 2);
    if (rank(m) != 2) continue;
    Matrix g = random_matrix(rng, q, 2, 3);
    Matrix sol = solve_through_mono(m, m * g);
    CHECK(sol == g);
    CHECK(m * sol == m * g);
  }
}

TEST_CASE("solve_through_epi") {
  Field q = Field::rational();
  Matrix f = mat(q, 2, 2, {1, 2, 3, 4});
  CHECK(solve_through_epi(Matrix::identity(q, 2), f) == f);
  CHECK(solve_through_epi(mat(q, 1, 2, {1, 1}), mat(q, 1, 2, {2, 2})) ==
        mat(q, 1, 1, {2}));
  CHECK_THROWS_AS(solve_through_epi(mat(q, 1, 2, {1, 1}), mat(q, 1, 2, {1, 0})),
                  NoCofactorization);

  std::mt19937 rng(59);
  for (int k = 0; k < 20; ++k) {
    Matrix e = random_matrix(rng, q, 2, 4);
    if (rank(e) != 2) continue;
    Matrix g = random_matrix(rng, q, 3, 2);
    CHECK(solve_through_epi(e, g * e) == g);
  }
}

TEST_CASE("invert") {
  Field q = Field::rational();
  CHECK(invert(Matrix::identity(q, 4)) == Matrix::identity(q, 4));
  Matrix half = invert(mat(q, 1, 1, {2}));
  CHECK(half.at(0, 0) == Scalar::rational(Rational(BigInt(1), BigInt(2))));
  CHECK_THROWS_AS(invert(mat(q, 2, 2, {1, 1, 1, 1})), Singular);
  Matrix a = mat(q, 3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 1});
  CHECK(a * invert(a) == Matrix::identity(q, 3));
  CHECK(invert(a) * a == Matrix::identity(q, 3));

  Field f13 = Field::prime(13);
  Matrix b = mat(f13, 2, 2, {1, 2, 3, 4});
  CHECK(b * invert(b) == Matrix::identity(f13, 2));
}

TEST_CASE("gaussian-field elimination works end to end") {
  Field g = Field::gaussian();
  Scalar i = Scalar::sqrt_minus_one(g);
  Matrix a(g, 2, 2);
  a.set(0, 0, Scalar::one(g));
  a.set(0, 1, i);
  a.set(1, 0, -i);
  a.set(1, 1, Scalar::integer(g, 2));
  CHECK(a * invert(a) == Matrix::identity(g, 2));
  Matrix sing(g, 2, 2);
  sing.set(0, 0, Scalar::one(g));
  sing.set(0, 1, i);
  sing.set(1, 0, i);
  sing.set(1, 1, -Scalar::one(g));  // second row = i * first row
  CHECK(rank(sing) == 1);
  CHECK(kernel_basis(sing).cols() == 1);
}
