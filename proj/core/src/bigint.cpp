#include "yblie/bigint.hpp"

#include <algorithm>

#include "yblie/errors.hpp"

namespace yblie {

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

std::vector<std::uint32_t> limbs_of_u64(std::uint64_t v) {
  std::vector<std::uint32_t> out;
  while (v != 0) {
    out.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  return out;
}

void trim(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

BigInt::BigInt(std::int64_t v) : small_(v) {
  if (v > kSmallMax || v < -kSmallMax) {
    sign_ = v < 0 ? -1 : 1;
    // |v| fits in uint64 even for INT64_MIN.
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                              : static_cast<std::uint64_t>(v);
    limbs_ = limbs_of_u64(mag);
    small_ = 0;
  }
}

int BigInt::sign() const {
  if (!small_mode()) return sign_;
  return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
}

std::vector<std::uint32_t> BigInt::magnitude() const {
  if (!small_mode()) return limbs_;
  std::uint64_t mag = small_ < 0 ? ~static_cast<std::uint64_t>(small_) + 1
                                 : static_cast<std::uint64_t>(small_);
  return limbs_of_u64(mag);
}

BigInt BigInt::from_magnitude(int sign, std::vector<std::uint32_t> mag) {
  trim(mag);
  BigInt out;
  out.sign_ = mag.empty() ? 0 : sign;
  out.limbs_ = std::move(mag);
  out.normalize();
  return out;
}

void BigInt::normalize() {
  trim(limbs_);
  if (limbs_.empty()) {
    sign_ = 0;
    return;
  }
  if (limbs_.size() <= 2) {
    std::uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (mag <= static_cast<std::uint64_t>(kSmallMax)) {
      small_ = static_cast<std::int64_t>(mag) * sign_;
      limbs_.clear();
      sign_ = 0;
    }
  }
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  trim(out);
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                          out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (b.empty()) throw Singular("division by zero");
  if (cmp_mag(a, b) < 0) {
    rem = a;
    return;
  }
  if (b.size() == 1) {
    // Single-limb fast path.
    std::uint64_t d = b[0];
    quot.assign(a.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | a[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    trim(quot);
    rem = limbs_of_u64(r);
    return;
  }
  // Schoolbook long division with normalized quotient-digit estimation.
  int shift = 0;
  for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
  auto shl = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] |= shift == 0 ? v[i] : (v[i] << shift);
      if (shift != 0) out[i + 1] = v[i] >> (32 - shift);
    }
    return out;  // not trimmed: keeps the extra top limb of the dividend
  };
  std::vector<std::uint32_t> u = shl(a);
  std::vector<std::uint32_t> d = shl(b);
  while (d.size() > b.size()) d.pop_back();
  const std::size_t n = d.size();
  const std::size_t m = u.size() - 1 - n;
  quot.assign(m + 1, 0);
  for (std::size_t jj = m + 1; jj-- > 0;) {
    std::uint64_t numer =
        (static_cast<std::uint64_t>(u[jj + n]) << 32) | u[jj + n - 1];
    std::uint64_t qhat = numer / d[n - 1];
    std::uint64_t rhat = numer % d[n - 1];
    while (qhat >= kBase ||
           (n >= 2 && qhat * d[n - 2] > ((rhat << 32) | u[jj + n - 2]))) {
      --qhat;
      rhat += d[n - 1];
      if (rhat >= kBase) break;
    }
    // u[jj .. jj+n] -= qhat * d
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t prod = qhat * d[i] + carry;
      carry = prod >> 32;
      std::int64_t diff = static_cast<std::int64_t>(u[jj + i]) -
                          static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
      borrow = 0;
      if (diff < 0) {
        diff += static_cast<std::int64_t>(kBase);
        borrow = 1;
      }
      u[jj + i] = static_cast<std::uint32_t>(diff);
    }
    std::int64_t top = static_cast<std::int64_t>(u[jj + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large: add d back once.
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[jj + i]) + d[i] + c2;
        u[jj + i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      top += static_cast<std::int64_t>(c2);
    }
    u[jj + n] = static_cast<std::uint32_t>(top);
    quot[jj] = static_cast<std::uint32_t>(qhat);
  }
  trim(quot);
  u.resize(n);
  if (shift != 0) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      u[i] = (u[i] >> shift) | (u[i + 1] << (32 - shift));
    u[n - 1] >>= shift;
  }
  trim(u);
  rem = std::move(u);
}

BigInt BigInt::operator-() const {
  if (small_mode()) return BigInt(-small_);
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const { return sign() < 0 ? -*this : *this; }

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.small_mode() && b.small_mode()) {
    __int128 s = static_cast<__int128>(a.small_) + b.small_;
    if (s <= BigInt::kSmallMax && s >= -static_cast<__int128>(BigInt::kSmallMax))
      return BigInt(static_cast<std::int64_t>(s));
  }
  int sa = a.sign(), sb = b.sign();
  if (sa == 0) return b;
  if (sb == 0) return a;
  auto ma = a.magnitude(), mb = b.magnitude();
  if (sa == sb) return BigInt::from_magnitude(sa, BigInt::add_mag(ma, mb));
  int c = BigInt::cmp_mag(ma, mb);
  if (c == 0) return BigInt(0);
  return c > 0 ? BigInt::from_magnitude(sa, BigInt::sub_mag(ma, mb))
               : BigInt::from_magnitude(sb, BigInt::sub_mag(mb, ma));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.small_mode() && b.small_mode()) {
    __int128 p = static_cast<__int128>(a.small_) * b.small_;
    if (p <= BigInt::kSmallMax && p >= -static_cast<__int128>(BigInt::kSmallMax))
      return BigInt(static_cast<std::int64_t>(p));
  }
  int s = a.sign() * b.sign();
  if (s == 0) return BigInt(0);
  return BigInt::from_magnitude(s, BigInt::mul_mag(a.magnitude(), b.magnitude()));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw Singular("division by zero");
  if (a.small_mode() && b.small_mode()) return BigInt(a.small_ / b.small_);
  std::vector<std::uint32_t> q, r;
  BigInt::divmod_mag(a.magnitude(), b.magnitude(), q, r);
  return BigInt::from_magnitude(a.sign() * b.sign(), std::move(q));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw Singular("division by zero");
  if (a.small_mode() && b.small_mode()) return BigInt(a.small_ % b.small_);
  std::vector<std::uint32_t> q, r;
  BigInt::divmod_mag(a.magnitude(), b.magnitude(), q, r);
  return BigInt::from_magnitude(a.sign(), std::move(r));
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.small_ == b.small_ && a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb;
  if (a.small_mode() && b.small_mode()) return a.small_ < b.small_;
  int c = BigInt::cmp_mag(a.magnitude(), b.magnitude());
  return sa >= 0 ? c < 0 : c > 0;
}

std::string BigInt::to_string() const {
  if (small_mode()) return std::to_string(small_);
  // Peel off 9 decimal digits at a time.
  std::vector<std::uint32_t> mag = limbs_;
  const std::vector<std::uint32_t> chunk = {1000000000u};
  std::string digits;
  while (!mag.empty()) {
    std::vector<std::uint32_t> q, r;
    divmod_mag(mag, chunk, q, r);
    std::uint32_t part = r.empty() ? 0 : r[0];
    std::string s = std::to_string(part);
    if (!q.empty()) s = std::string(9 - s.size(), '0') + s;
    digits = s + digits;
    mag = std::move(q);
  }
  return (sign_ < 0 ? "-" : "") + digits;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("sign without digits in integer literal");
  BigInt out(0);
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("invalid digit in integer literal: '" +
                       std::string(s) + "'");
    out = out * ten + BigInt(s[i] - '0');
  }
  return neg ? -out : out;
}

BigInt gcd(BigInt a, BigInt b) {
  if (a.fits_int64() && b.fits_int64()) {
    std::int64_t x = a.to_int64(), y = b.to_int64();
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return BigInt(x);
  }
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace yblie
