#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

/// Number of chart coordinates; the whole library works on 7-dimensional
/// patches.
inline constexpr int kDim = 7;

/// Canonical coordinate names x1..x7.
inline const std::array<std::string, kDim>& canonical_names() {
  static const std::array<std::string, kDim> names = {"x1", "x2", "x3", "x4",
                                                      "x5", "x6", "x7"};
  return names;
}

/// Exponent vector of a monomial in the 7 coordinates.
struct Monomial {
  std::array<std::uint8_t, kDim> exp{};

  static Monomial one() { return Monomial{}; }

  static Monomial var(int axis, int power = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(axis - 1)] =
        static_cast<std::uint8_t>(power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kDim; ++i)
      m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
          a.exp[static_cast<std::size_t>(i)] + b.exp[static_cast<std::size_t>(i)]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lexicographic, highest first: canonical term order for equality,
// serialization and report output.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

/// A point of the chart; exact rational coordinates.
struct Point {
  std::array<Rational, kDim> x{};

  static Point origin() { return Point{}; }

  const Rational& coord(int axis) const {
    return x[static_cast<std::size_t>(axis - 1)];
  }
  Rational& coord(int axis) { return x[static_cast<std::size_t>(axis - 1)]; }

  friend bool operator==(const Point&, const Point&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < kDim; ++i) {
      if (i) s += ", ";
      s += x[static_cast<std::size_t>(i)].to_string();
    }
    return s + ")";
  }
};

// Sparse multivariate polynomial over exact rationals in the 7 chart
// coordinates. No zero coefficients are stored; the zero polynomial is the
// empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  Polynomial(long long v) {  // NOLINT: implicit by design
    if (v != 0) terms_.emplace(Monomial::one(), Rational(v));
  }
  Polynomial(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
  }

  static Polynomial variable(int axis) { return monomial(Monomial::var(axis), 1); }

  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  /// Constant term (total value when is_constant()).
  Rational constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    Polynomial r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    return a * s;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial partial(int axis) const {
    Polynomial r;
    const std::size_t a = static_cast<std::size_t>(axis - 1);
    for (const auto& [m, c] : terms_) {
      if (m.exp[a] == 0) continue;
      Monomial d = m;
      d.exp[a] = static_cast<std::uint8_t>(d.exp[a] - 1);
      r.add_term(d, c * Rational(m.exp[a]));
    }
    return r;
  }

  Rational eval(const Point& pt) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < kDim; ++i) {
        const auto e = m.exp[static_cast<std::size_t>(i)];
        if (e) t *= Rational::pow(pt.x[static_cast<std::size_t>(i)], e);
      }
      out += t;
    }
    return out;
  }

  // Canonical serialization: graded-lexicographic term order (leading term
  // first), each term "[sign] rational [* var [^ power]]...".
  std::string to_string(
      const std::array<std::string, kDim>& names = canonical_names()) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first) {
        if (c.is_negative()) out += "-";
        first = false;
      } else {
        out += c.is_negative() ? " - " : " + ";
      }
      out += c.abs().to_string();
      for (int i = 0; i < kDim; ++i) {
        const auto e = m.exp[static_cast<std::size_t>(i)];
        if (!e) continue;
        out += "*" + names[static_cast<std::size_t>(i)];
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  /// Parses the term grammar above. Accepts the declared coordinate names
  /// plus the canonical x1..x7 spellings; a bare variable carries an
  /// implicit unit coefficient.
  static Polynomial parse(
      std::string_view text,
      const std::array<std::string, kDim>& names = canonical_names()) {
    Parser p{text, names, 0};
    Polynomial result = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
      throw ParseError("unexpected trailing input in polynomial",
                       "offset " + std::to_string(p.pos) + " of '" +
                           std::string(text) + "'");
    return result;
  }

 private:
  TermMap terms_;

  struct Parser {
    std::string_view s;
    const std::array<std::string, kDim>& names;
    std::size_t pos;

    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
      throw ParseError(msg, "offset " + std::to_string(pos) + " of '" +
                                std::string(s) + "'");
    }

    bool eat(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    std::optional<BigInt> try_integer() {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) return std::nullopt;
      return BigInt::from_string(s.substr(start, pos - start));
    }

    std::optional<int> try_variable() {
      skip_ws();
      std::size_t start = pos;
      if (pos >= s.size() ||
          !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        return std::nullopt;
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string_view ident = s.substr(start, pos - start);
      for (int i = 0; i < kDim; ++i)
        if (ident == names[static_cast<std::size_t>(i)]) return i + 1;
      for (int i = 0; i < kDim; ++i)
        if (ident == canonical_names()[static_cast<std::size_t>(i)]) return i + 1;
      fail("unknown variable '" + std::string(ident) + "'");
    }

    Rational parse_rational_from(BigInt numerator) {
      if (eat('/')) {
        auto den = try_integer();
        if (!den) fail("expected denominator digits");
        return Rational(std::move(numerator), std::move(*den));
      }
      return Rational(std::move(numerator), BigInt(1));
    }

    int parse_power() {
      if (!eat('^')) return 1;
      auto e = try_integer();
      if (!e || !e->fits_longlong()) fail("expected exponent digits");
      long long v = std::stoll(e->to_string());
      if (v < 0 || v > 255) fail("exponent out of range");
      return static_cast<int>(v);
    }

    // term := rational { '*' var ['^' power] } | var ['^' power] { '*' ... }
    Polynomial parse_term() {
      Rational coeff(1);
      Monomial mono = Monomial::one();
      bool saw_factor = false;
      if (auto n = try_integer()) {
        coeff = parse_rational_from(std::move(*n));
        saw_factor = true;
      } else if (auto v = try_variable()) {
        int power = parse_power();
        mono.exp[static_cast<std::size_t>(*v - 1)] =
            static_cast<std::uint8_t>(mono.exp[static_cast<std::size_t>(*v - 1)] +
                                      power);
        saw_factor = true;
      }
      if (!saw_factor) fail("expected a term");
      while (eat('*')) {
        if (auto v = try_variable()) {
          int power = parse_power();
          mono.exp[static_cast<std::size_t>(*v - 1)] = static_cast<std::uint8_t>(
              mono.exp[static_cast<std::size_t>(*v - 1)] + power);
        } else if (auto n = try_integer()) {
          coeff *= parse_rational_from(std::move(*n));
        } else {
          fail("expected a factor after '*'");
        }
      }
      return Polynomial::monomial(mono, coeff);
    }

    Polynomial parse_sum() {
      Polynomial acc;
      skip_ws();
      bool negative = false;
      if (eat('-'))
        negative = true;
      else
        eat('+');
      for (;;) {
        Polynomial t = parse_term();
        acc += negative ? -t : t;
        skip_ws();
        if (eat('-'))
          negative = true;
        else if (eat('+'))
          negative = false;
        else
          break;
      }
      return acc;
    }
  };
};

}  // namespace g2kit
