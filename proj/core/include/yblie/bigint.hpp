#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace yblie {

/// Arbitrary-precision signed integer.
///
/// Values with |v| <= 2^62 are kept in a single machine word; larger values
/// spill into a little-endian base-2^32 magnitude with a separate sign.
/// Results are always renormalized, so two equal values compare equal
/// member-wise.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  static BigInt from_string(std::string_view s);  // throws ParseError

  bool is_zero() const { return limbs_.empty() && small_ == 0; }
  bool is_one() const { return limbs_.empty() && small_ == 1; }
  int sign() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Quotient truncated toward zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  /// Remainder with the sign of the dividend.
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  std::string to_string() const;

  /// True if the value fits in int64 (used by the prime-field fast path).
  bool fits_int64() const { return limbs_.empty(); }
  std::int64_t to_int64() const { return small_; }

 private:
  static constexpr std::int64_t kSmallMax = std::int64_t{1} << 62;

  // Small mode: limbs_ empty, value in small_.  Big mode: limbs_ hold the
  // magnitude (top limb nonzero), sign_ is +-1 and small_ is unused.
  std::int64_t small_ = 0;
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  bool small_mode() const { return limbs_.empty(); }
  std::vector<std::uint32_t> magnitude() const;
  static BigInt from_magnitude(int sign, std::vector<std::uint32_t> mag);
  void normalize();

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires a >= b.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
};

BigInt gcd(BigInt a, BigInt b);

}  // namespace yblie
