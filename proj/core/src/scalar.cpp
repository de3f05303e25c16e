#include "yblie/scalar.hpp"

#include <utility>

#include "yblie/errors.hpp"

namespace yblie {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Singular("division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p))
    throw ParseError("prime field modulus must be an odd prime, got " +
                     std::to_string(p));
  return {FieldKind::PrimeField, p};
}

bool Field::has_root_of_minus_one() const {
  switch (kind) {
    case FieldKind::Rational: return false;
    case FieldKind::GaussianRational: return true;
    case FieldKind::PrimeField: return p % 4 == 1;
  }
  return false;
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::Rational: return "rational";
    case FieldKind::GaussianRational: return "gaussian_rational";
    case FieldKind::PrimeField: return "prime_field(" + std::to_string(p) + ")";
  }
  return "?";
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Singular("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (num_.is_zero()) den_ = BigInt(1);
}

namespace {

bool all_small(const Rational& a, const Rational& b) {
  return a.num().fits_int64() && a.den().fits_int64() &&
         b.num().fits_int64() && b.den().fits_int64();
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  if (all_small(a, b))
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  // Knuth-style pre-reduction keeps intermediate magnitudes near the output.
  BigInt g = gcd(a.den_, b.den_);
  if (g.is_one())
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  BigInt da = a.den_ / g, db = b.den_ / g;
  return Rational(a.num_ * db + b.num_ * da, a.den_ * db);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
  if (all_small(a, b)) return Rational(a.num_ * b.num_, a.den_ * b.den_);
  BigInt g1 = gcd(a.num_, b.den_);
  BigInt g2 = gcd(b.num_, a.den_);
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Singular("rational division by zero");
  if (all_small(a, b)) return Rational(a.num_ * b.den_, a.den_ * b.num_);
  BigInt g1 = gcd(a.num_, b.num_);
  BigInt g2 = gcd(b.den_, a.den_);
  return Rational((a.num_ / g1) * (b.den_ / g2), (a.den_ / g2) * (b.num_ / g1));
}
Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

Scalar::Scalar(const Scalar& other)
    : field_(other.field_),
      re_(other.re_),
      im_(other.im_ ? std::make_unique<Rational>(*other.im_) : nullptr),
      res_(other.res_) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    field_ = other.field_;
    re_ = other.re_;
    im_ = other.im_ ? std::make_unique<Rational>(*other.im_) : nullptr;
    res_ = other.res_;
  }
  return *this;
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return integer(f, 1); }

Scalar Scalar::integer(const Field& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::PrimeField) {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += f.p;
    s.res_ = static_cast<std::uint64_t>(m);
  } else {
    s.re_ = Rational(v);
  }
  return s;
}

Scalar Scalar::rational(Rational r) {
  Scalar s;
  s.field_ = Field::rational();
  s.re_ = std::move(r);
  return s;
}

Scalar Scalar::gaussian(Rational re, Rational im) {
  Scalar s;
  s.field_ = Field::gaussian();
  s.re_ = std::move(re);
  if (!im.is_zero()) s.im_ = std::make_unique<Rational>(std::move(im));
  return s;
}

Scalar Scalar::prime(const Field& f, std::uint64_t residue) {
  if (f.kind != FieldKind::PrimeField)
    throw FieldMismatch("prime() requires a prime field");
  Scalar s;
  s.field_ = f;
  s.res_ = residue % f.p;
  return s;
}

Scalar Scalar::sqrt_minus_one(const Field& f) {
  switch (f.kind) {
    case FieldKind::GaussianRational:
      return gaussian(Rational(0), Rational(1));
    case FieldKind::PrimeField: {
      if (f.p % 4 != 1)
        throw MissingRootOfUnity("F_" + std::to_string(f.p) +
                                 " has no square root of -1");
      // i = n^((p-1)/4) for any quadratic non-residue n.
      for (std::uint64_t n = 2; n < f.p; ++n) {
        if (mod_pow(n, (f.p - 1) / 2, f.p) == f.p - 1)
          return prime(f, mod_pow(n, (f.p - 1) / 4, f.p));
      }
      throw MissingRootOfUnity("no non-residue found (unreachable)");
    }
    case FieldKind::Rational:
      throw MissingRootOfUnity("the rationals have no square root of -1");
  }
  throw MissingRootOfUnity("unknown field");
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldKind::PrimeField) return res_ == 0;
  return re_.is_zero() && (!im_ || im_->is_zero());
}

bool Scalar::is_one() const {
  if (field_.kind == FieldKind::PrimeField) return res_ == 1;
  return re_ == Rational(1) && (!im_ || im_->is_zero());
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_))
    throw FieldMismatch("scalars from different fields: " + a.field_.name() +
                        " vs " + b.field_.name());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar out = Scalar::zero(a.field_);
  switch (a.field_.kind) {
    case FieldKind::PrimeField:
      out.res_ = (a.res_ + b.res_) % a.p();
      break;
    case FieldKind::GaussianRational: {
      Rational im = a.imag_part() + b.imag_part();
      out.re_ = a.re_ + b.re_;
      if (!im.is_zero()) out.im_ = std::make_unique<Rational>(std::move(im));
      break;
    }
    case FieldKind::Rational:
      out.re_ = a.re_ + b.re_;
      break;
  }
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar out = Scalar::zero(a.field_);
  switch (a.field_.kind) {
    case FieldKind::PrimeField:
      out.res_ = mod_mul(a.res_, b.res_, a.p());
      break;
    case FieldKind::GaussianRational: {
      Rational ai = a.imag_part(), bi = b.imag_part();
      Rational re = a.re_ * b.re_ - ai * bi;
      Rational im = a.re_ * bi + ai * b.re_;
      out.re_ = std::move(re);
      if (!im.is_zero()) out.im_ = std::make_unique<Rational>(std::move(im));
      break;
    }
    case FieldKind::Rational:
      out.re_ = a.re_ * b.re_;
      break;
  }
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out = Scalar::zero(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField:
      out.res_ = res_ == 0 ? 0 : p() - res_;
      break;
    case FieldKind::GaussianRational: {
      out.re_ = -re_;
      if (im_ && !im_->is_zero())
        out.im_ = std::make_unique<Rational>(-*im_);
      break;
    }
    case FieldKind::Rational:
      out.re_ = -re_;
      break;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Singular("inverse of zero");
  Scalar out = Scalar::zero(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField:
      out.res_ = mod_inv(res_, p());
      break;
    case FieldKind::GaussianRational: {
      // 1/(a+bi) = (a-bi)/(a^2+b^2)
      Rational b = imag_part();
      Rational n = re_ * re_ + b * b;
      out.re_ = re_ / n;
      Rational im = -(b / n);
      if (!im.is_zero()) out.im_ = std::make_unique<Rational>(std::move(im));
      break;
    }
    case FieldKind::Rational:
      out.re_ = Rational(1) / re_;
      break;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.kind == FieldKind::PrimeField) return a.res_ == b.res_;
  return a.re_ == b.re_ && a.imag_part() == b.imag_part();
}

std::string Scalar::to_string() const {
  switch (field_.kind) {
    case FieldKind::PrimeField:
      return std::to_string(res_);
    case FieldKind::Rational:
      return re_.to_string();
    case FieldKind::GaussianRational: {
      Rational im = imag_part();
      if (im.is_zero()) return re_.to_string();
      std::string itxt;
      if (im == Rational(1)) itxt = "i";
      else if (im == Rational(-1)) itxt = "-i";
      else itxt = im.to_string() + "i";
      if (re_.is_zero()) return itxt;
      if (itxt[0] == '-') return re_.to_string() + itxt;
      return re_.to_string() + "+" + itxt;
    }
  }
  return "?";
}

namespace {

// Splits "a/b+c/di"-style text into real and imaginary rational parts.
void parse_gaussian_parts(std::string_view text, Rational& re, Rational& im) {
  re = Rational(0);
  im = Rational(0);
  std::size_t pos = 0;
  bool saw_term = false;
  while (pos < text.size()) {
    std::size_t start = pos;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
    std::string_view term = text.substr(start, pos - start);
    if (term.empty() || term == "+" || term == "-")
      throw ParseError("empty term in scalar literal '" + std::string(text) + "'");
    bool imag = term.back() == 'i';
    if (imag) term.remove_suffix(1);
    Rational value;
    if (term.empty() || term == "+")
      value = Rational(1);
    else if (term == "-")
      value = Rational(-1);
    else
      value = Rational::from_string(term);
    if (imag)
      im = im + value;
    else
      re = re + value;
    saw_term = true;
  }
  if (!saw_term) throw ParseError("empty scalar literal");
}

}  // namespace

Scalar Scalar::parse(const Field& f, std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar literal");
  try {
    switch (f.kind) {
      case FieldKind::Rational:
        return rational(Rational::from_string(text));
      case FieldKind::GaussianRational: {
        Rational re, im;
        parse_gaussian_parts(text, re, im);
        return gaussian(std::move(re), std::move(im));
      }
      case FieldKind::PrimeField: {
        BigInt v = BigInt::from_string(text);
        BigInt m = v % BigInt(static_cast<std::int64_t>(f.p));
        std::int64_t r = m.to_int64();
        if (r < 0) r += f.p;
        return prime(f, static_cast<std::uint64_t>(r));
      }
    }
  } catch (const Singular&) {
    throw ParseError("zero denominator in scalar literal '" + std::string(text) + "'");
  }
  throw ParseError("unknown field");
}

}  // namespace yblie
