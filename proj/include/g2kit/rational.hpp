#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "g2kit/bigint.hpp"
#include "g2kit/errors.hpp"

namespace g2kit {

// Exact rational scalar: reduced to lowest terms, denominator always
// positive, zero stored as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
  }

  /// Parses "p", "-p" or "p/q" (q positive after reduction).
  static Rational from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
      return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_negative() const { return num_.sign() < 0; }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r = *this;
    r.num_.negate();
    return r;
  }

  Rational abs() const { return is_negative() ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  Rational inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(den_, num_);
  }

  static Rational pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (e < 0) return pow(base.inverse(), -e);
    return Rational(BigInt::pow(base.num_, static_cast<unsigned>(e)),
                    BigInt::pow(base.den_, static_cast<unsigned>(e)));
  }

  /// Exact square root when numerator and denominator are perfect squares.
  std::optional<Rational> sqrt_exact() const {
    if (is_negative()) return std::nullopt;
    BigInt rn = BigInt::isqrt(num_);
    if (!(rn * rn == num_)) return std::nullopt;
    BigInt rd = BigInt::isqrt(den_);
    if (!(rd * rd == den_)) return std::nullopt;
    return Rational(std::move(rn), std::move(rd));
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

 private:
  BigInt num_, den_;

  void reduce() {
    if (den_.is_zero()) throw Error("Rational: zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.sign() < 0) {
      num_.negate();
      den_.negate();
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

}  // namespace g2kit
