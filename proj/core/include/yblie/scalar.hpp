#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "yblie/bigint.hpp"

namespace yblie {

enum class FieldKind { Rational, GaussianRational, PrimeField };

/// Descriptor of the base field.  p is meaningful only for prime fields and
/// must be an odd prime (validated on construction, trial division).
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;

  static Field rational() { return {FieldKind::Rational, 0}; }
  static Field gaussian() { return {FieldKind::GaussianRational, 0}; }
  static Field prime(std::uint32_t p);  // throws ParseError if not an odd prime

  /// Characteristic zero fields contain a primitive fourth root of unity
  /// only in the Gaussian case; F_p has one iff p = 1 (mod 4).
  bool has_root_of_minus_one() const;

  friend bool operator==(const Field& a, const Field& b) = default;
  std::string name() const;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den);  // normalizes, throws Singular on den = 0
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string to_string() const;
  static Rational from_string(std::string_view s);

 private:
  BigInt num_, den_;
};

/// A scalar from one of the three supported exact fields.
///
/// Every scalar knows its field; mixing fields throws FieldMismatch.  All
/// arithmetic is exact, so equality is the only comparison the library needs.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar integer(const Field& f, std::int64_t v);
  static Scalar rational(Rational r);
  static Scalar gaussian(Rational re, Rational im);
  static Scalar prime(const Field& f, std::uint64_t residue);
  /// The canonical i with i^2 = -1; throws MissingRootOfUnity if absent.
  static Scalar sqrt_minus_one(const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;  // throws Singular on zero
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "a/b" or "a" (rational), "a/b+c/di" with either
  /// part omitted when zero (Gaussian), plain residue (prime field).
  std::string to_string() const;
  /// Parses the syntax above in the given field.  Integer literals are
  /// accepted by every field; prime-field values are reduced mod p.
  static Scalar parse(const Field& f, std::string_view text);

  const Rational& real_part() const { return re_; }
  Rational imag_part() const { return im_ ? *im_ : Rational(0); }
  std::uint64_t residue() const { return res_; }

  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

 private:
  Field field_ = Field::rational();
  Rational re_;
  std::unique_ptr<Rational> im_;  // Gaussian imaginary part; null means 0
  std::uint64_t res_ = 0;         // prime-field residue in [0, p)

  static void require_same_field(const Scalar& a, const Scalar& b);
  std::uint64_t p() const { return field_.p; }
};

}  // namespace yblie
