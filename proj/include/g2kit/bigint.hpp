#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "g2kit/errors.hpp"

namespace g2kit {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian, no leading zero limbs, empty magnitude iff value is zero).
// Coefficients in this library stay small, so every operation is schoolbook;
// division is Knuth's algorithm D.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Two's-complement safe magnitude (handles LLONG_MIN).
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                              : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
  }

  static BigInt from_string(std::string_view s) {
    BigInt out;
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i == s.size()) throw Error("BigInt: empty numeral");
    const BigInt chunk_base(1000000000LL);
    std::uint32_t chunk = 0;
    int chunk_len = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw Error("BigInt: invalid digit in numeral '" + std::string(s) + "'");
      chunk = chunk * 10 + static_cast<std::uint32_t>(s[i] - '0');
      if (++chunk_len == 9) {
        out = out * chunk_base + BigInt(static_cast<long long>(chunk));
        chunk = 0;
        chunk_len = 0;
      }
    }
    if (chunk_len > 0) {
      long long scale = 1;
      for (int k = 0; k < chunk_len; ++k) scale *= 10;
      out = out * BigInt(scale) + BigInt(static_cast<long long>(chunk));
    }
    if (sign < 0) out.negate();
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  int sign() const { return sign_; }

  void negate() { sign_ = -sign_; }
  BigInt operator-() const {
    BigInt r = *this;
    r.negate();
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ == b.sign_ ? 1 : -1;
    return r;
  }

  // Truncated division: quotient rounds toward zero, remainder takes the
  // dividend's sign (C semantics).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
      q.mag_ = std::move(qm);
      q.sign_ = a.sign_ == b.sign_ ? 1 : -1;
    }
    if (!rm.empty()) {
      r.mag_ = std::move(rm);
      r.sign_ = a.sign_;
    }
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
      BigInt r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x;
  }

  static BigInt pow(const BigInt& base, unsigned e) {
    BigInt acc(1), sq = base;
    while (e) {
      if (e & 1u) acc *= sq;
      e >>= 1u;
      if (e) sq *= sq;
    }
    return acc;
  }

  // Floor of the square root; requires a non-negative value.
  static BigInt isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw Error("BigInt: isqrt of negative value");
    if (n.sign_ == 0) return BigInt();
    if (n < BigInt(4)) return BigInt(1);
    // Newton iteration from an over-estimate; monotone decreasing.
    BigInt x = BigInt(1) << static_cast<int>((n.bit_length() + 2) / 2);
    for (;;) {
      BigInt y = (x + n / x) >> 1;
      if (y >= x) return x;
      x = std::move(y);
    }
  }

  friend BigInt operator<<(const BigInt& a, int bits) {
    if (a.sign_ == 0 || bits == 0) return a;
    BigInt r = a;
    int limbs = bits / 32, rest = bits % 32;
    if (rest) r.mag_ = shl_bits(r.mag_, rest);
    r.mag_.insert(r.mag_.begin(), static_cast<std::size_t>(limbs), 0u);
    return r;
  }

  friend BigInt operator>>(const BigInt& a, int bits) {
    if (a.sign_ == 0 || bits == 0) return a;
    int limbs = bits / 32, rest = bits % 32;
    if (static_cast<std::size_t>(limbs) >= a.mag_.size()) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.begin() + limbs, a.mag_.end());
    if (rest) r.mag_ = shr_bits(r.mag_, rest);
    trim(r.mag_);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return r;
  }

  std::size_t bit_length() const {
    if (sign_ == 0) return 0;
    return (mag_.size() - 1) * 32 +
           (32 - static_cast<std::size_t>(std::countl_zero(mag_.back())));
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      trim(m);
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  double to_double() const {
    double d = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) d = d * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -d : d;
  }

  bool fits_longlong() const {
    if (mag_.size() > 2) return false;
    std::uint64_t v = 0;
    if (mag_.size() == 2) v = (static_cast<std::uint64_t>(mag_[1]) << 32);
    if (!mag_.empty()) v |= mag_[0];
    if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
    return v <= 0x8000000000000000ULL;
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  static void trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t t = static_cast<std::uint64_t>(big[i]) + carry;
      if (i < small.size()) t += small[i];
      r[i] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    trim(r);
    return r;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = t < 0;
      if (t < 0) t += (1LL << 32);
      r[i] = static_cast<std::uint32_t>(t);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t t = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<std::uint32_t>(t);
        carry = t >> 32;
      }
      std::size_t k = i + b.size();
      while (carry) {
        std::uint64_t t = static_cast<std::uint64_t>(r[k]) + carry;
        r[k] = static_cast<std::uint32_t>(t);
        carry = t >> 32;
        ++k;
      }
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& a,
                                             int s) {
    if (s == 0) return a;
    std::vector<std::uint32_t> r(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = a[i] >> (32 - s);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> shr_bits(const std::vector<std::uint32_t>& a,
                                             int s) {
    if (s == 0) return a;
    std::vector<std::uint32_t> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
    }
    trim(r);
    return r;
  }

  // Knuth algorithm D on magnitudes; produces a = q*b + r with 0 <= r < b.
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      trim(r);
      return;
    }
    if (b.size() == 1) {
      std::uint32_t d = b[0];
      q.assign(a.size(), 0);
      std::uint64_t rem = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      trim(q);
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }

    const int shift = std::countl_zero(b.back());
    std::vector<std::uint32_t> v = shl_bits(b, shift);
    std::vector<std::uint32_t> u = shl_bits(a, shift);
    const std::size_t n = v.size();
    u.resize(std::max(u.size(), a.size()) + 1, 0);
    const std::size_t m = u.size() - n - 1;
    q.assign(m + 1, 0);

    const std::uint64_t base = 1ULL << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num =
          (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      std::uint64_t qhat = num / v[n - 1];
      std::uint64_t rhat = num % v[n - 1];
      while (qhat >= base ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= base) break;
      }
      // Multiply and subtract.
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                         static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
        borrow = t < 0;
        if (t < 0) t += static_cast<std::int64_t>(base);
        u[i + j] = static_cast<std::uint32_t>(t);
      }
      std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large: add the divisor back.
        u[j + n] = static_cast<std::uint32_t>(t + static_cast<std::int64_t>(base));
        --qhat;
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
          u[i + j] = static_cast<std::uint32_t>(s);
          c = s >> 32;
        }
        u[j + n] = static_cast<std::uint32_t>(u[j + n] + c);
      } else {
        u[j + n] = static_cast<std::uint32_t>(t);
      }
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    trim(q);
    u.resize(n);
    r = shr_bits(u, shift);
    trim(r);
  }
};

}  // namespace g2kit
