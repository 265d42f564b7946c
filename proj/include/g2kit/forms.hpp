#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/linalg.hpp"
#include "g2kit/polynomial.hpp"

namespace g2kit {

// Strictly increasing tuple of axis labels from {1,...,7}; the basis symbol
// e^{i1...ik} = dx^{i1} ∧ ... ∧ dx^{ik}.
struct MultiIndex {
  std::uint8_t len = 0;
  std::array<std::uint8_t, kDim> idx{};

  static MultiIndex empty() { return MultiIndex{}; }

  static MultiIndex of(std::initializer_list<int> axes) {
    auto m = make(std::vector<int>(axes));
    if (!m) throw Error("multi-index is not strictly increasing in 1..7");
    return *m;
  }

  static std::optional<MultiIndex> make(std::span<const int> axes) {
    if (axes.size() > kDim) return std::nullopt;
    MultiIndex m;
    m.len = static_cast<std::uint8_t>(axes.size());
    int prev = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (axes[i] <= prev || axes[i] > kDim) return std::nullopt;
      m.idx[i] = static_cast<std::uint8_t>(axes[i]);
      prev = axes[i];
    }
    return m;
  }

  static MultiIndex full() {
    MultiIndex m;
    m.len = kDim;
    for (int i = 0; i < kDim; ++i)
      m.idx[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return m;
  }

  int degree() const { return len; }

  int axis(int pos) const { return idx[static_cast<std::size_t>(pos)]; }

  bool contains(int a) const {
    for (int i = 0; i < len; ++i)
      if (idx[static_cast<std::size_t>(i)] == a) return true;
    return false;
  }

  MultiIndex without_position(int pos) const {
    MultiIndex m;
    m.len = static_cast<std::uint8_t>(len - 1);
    int k = 0;
    for (int i = 0; i < len; ++i)
      if (i != pos) m.idx[static_cast<std::size_t>(k++)] = idx[static_cast<std::size_t>(i)];
    return m;
  }

  MultiIndex complement() const {
    MultiIndex m;
    m.len = static_cast<std::uint8_t>(kDim - len);
    int k = 0;
    for (int a = 1; a <= kDim; ++a)
      if (!contains(a)) m.idx[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(a);
    return m;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    if (a.len != b.len) return false;
    for (int i = 0; i < a.len; ++i)
      if (a.idx[static_cast<std::size_t>(i)] != b.idx[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) {
    if (a.len != b.len) return a.len <=> b.len;
    for (int i = 0; i < a.len; ++i) {
      auto c = a.idx[static_cast<std::size_t>(i)] <=> b.idx[static_cast<std::size_t>(i)];
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < len; ++i)
      s += static_cast<char>('0' + idx[static_cast<std::size_t>(i)]);
    return s;
  }
};

// Sign and union of e^A ∧ e^B: (-1)^{inversions of the concatenation A,B},
// nullopt when the index sets intersect. This inversion-count convention is
// the sign rule every identity in the library is pinned to.
inline std::optional<std::pair<MultiIndex, int>> merge_indices(
    const MultiIndex& a, const MultiIndex& b) {
  MultiIndex u;
  u.len = static_cast<std::uint8_t>(a.len + b.len);
  if (u.len > kDim) return std::nullopt;
  int i = 0, j = 0, k = 0, inversions = 0;
  while (i < a.len && j < b.len) {
    const int ai = a.axis(i), bj = b.axis(j);
    if (ai == bj) return std::nullopt;
    if (ai < bj) {
      u.idx[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(ai);
      ++i;
    } else {
      // b.axis(j) jumps past the remaining entries of a.
      inversions += a.len - i;
      u.idx[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(bj);
      ++j;
    }
  }
  while (i < a.len) u.idx[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(a.axis(i++));
  while (j < b.len) u.idx[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(b.axis(j++));
  return std::make_pair(u, inversions % 2 == 0 ? 1 : -1);
}

// Degree-k alternating form with polynomial coefficients on strictly
// increasing multi-indices. Forms of degree > 7 are identically zero and
// unrepresentable; operations that would produce them return a zero form.
class KForm {
 public:
  using TermMap = std::map<MultiIndex, Polynomial>;

  explicit KForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw Error("form degree out of range");
  }

  static KForm zero(int degree) { return KForm(degree); }

  static KForm scalar(const Polynomial& p) {
    KForm f(0);
    f.add_term(MultiIndex::empty(), p);
    return f;
  }

  static KForm dx(int axis) {
    KForm f(1);
    f.add_term(MultiIndex::of({axis}), Polynomial(1));
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const TermMap& terms() const { return coeffs_; }

  Polynomial coefficient(const MultiIndex& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Polynomial() : it->second;
  }

  /// Coefficient polynomial of e^{1...7}; only meaningful for 7-forms.
  Polynomial top_coefficient() const { return coefficient(MultiIndex::full()); }

  void add_term(const MultiIndex& m, const Polynomial& p) {
    if (m.degree() != degree_)
      throw Error("multi-index length does not match form degree");
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(m, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw Error("form degrees differ in sum");
    KForm r = a;
    for (const auto& [m, p] : b.coeffs_) r.add_term(m, p);
    return r;
  }

  friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

  KForm operator-() const {
    KForm r(degree_);
    for (const auto& [m, p] : coeffs_) r.coeffs_.emplace(m, -p);
    return r;
  }

  KForm scaled(const Rational& s) const {
    KForm r(degree_);
    if (s.is_zero()) return r;
    for (const auto& [m, p] : coeffs_) r.coeffs_.emplace(m, p * s);
    return r;
  }

  KForm scaled(const Polynomial& s) const {
    KForm r(degree_);
    for (const auto& [m, p] : coeffs_) r.add_term(m, p * s);
    return r;
  }

  // Zero forms compare equal regardless of recorded degree.
  friend bool operator==(const KForm& a, const KForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(
      const std::array<std::string, kDim>& names = canonical_names()) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [m, p] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += "(" + p.to_string(names) + ")";
      if (m.degree() > 0) out += " e{" + m.to_string() + "}";
    }
    return out;
  }

 private:
  int degree_;
  TermMap coeffs_;
};

/// Vector field on the chart: 7 polynomial components in the coordinate
/// frame.
struct VectorField {
  std::array<Polynomial, kDim> comp{};

  static VectorField zero() { return VectorField{}; }

  static VectorField basis(int axis) {
    VectorField v;
    v.comp[static_cast<std::size_t>(axis - 1)] = Polynomial(1);
    return v;
  }

  const Polynomial& component(int axis) const {
    return comp[static_cast<std::size_t>(axis - 1)];
  }
  Polynomial& component(int axis) {
    return comp[static_cast<std::size_t>(axis - 1)];
  }

  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int i = 0; i < kDim; ++i)
      r.comp[static_cast<std::size_t>(i)] =
          a.comp[static_cast<std::size_t>(i)] + b.comp[static_cast<std::size_t>(i)];
    return r;
  }

  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int i = 0; i < kDim; ++i)
      r.comp[static_cast<std::size_t>(i)] =
          a.comp[static_cast<std::size_t>(i)] - b.comp[static_cast<std::size_t>(i)];
    return r;
  }

  VectorField scaled(const Polynomial& s) const {
    VectorField r;
    for (int i = 0; i < kDim; ++i)
      r.comp[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)] * s;
    return r;
  }

  VectorField scaled(const Rational& s) const {
    VectorField r;
    for (int i = 0; i < kDim; ++i)
      r.comp[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)] * s;
    return r;
  }

  friend bool operator==(const VectorField&, const VectorField&) = default;

  std::string to_string(
      const std::array<std::string, kDim>& names = canonical_names()) const {
    std::string out;
    for (int i = 0; i < kDim; ++i) {
      const auto& p = comp[static_cast<std::size_t>(i)];
      if (p.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + p.to_string(names) + ") d/d" + names[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "0" : out;
  }
};

/// Wedge product; bilinear over polynomial coefficients, sign by inversion
/// count of the merged index sequences, zero when the degree exceeds 7.
inline KForm wedge(const KForm& a, const KForm& b) {
  const int deg = a.degree() + b.degree();
  if (deg > kDim) return KForm::zero(kDim);
  KForm r(deg);
  for (const auto& [ma, pa] : a.terms())
    for (const auto& [mb, pb] : b.terms()) {
      auto merged = merge_indices(ma, mb);
      if (!merged) continue;
      Polynomial prod = pa * pb;
      if (merged->second < 0) prod = -prod;
      r.add_term(merged->first, prod);
    }
  return r;
}

inline KForm wedge_power(const KForm& a, int n) {
  if (n <= 0) return KForm::scalar(Polynomial(1));
  KForm r = a;
  for (int i = 1; i < n; ++i) r = wedge(r, a);
  return r;
}

/// Exterior derivative d(p e^I) = Σ_a (∂p/∂x_a) dx^a ∧ e^I.
inline KForm exterior_derivative(const KForm& a) {
  if (a.degree() == kDim) return KForm::zero(kDim);
  KForm r(a.degree() + 1);
  for (const auto& [m, p] : a.terms()) {
    for (int axis = 1; axis <= kDim; ++axis) {
      if (m.contains(axis)) continue;
      Polynomial dp = p.partial(axis);
      if (dp.is_zero()) continue;
      MultiIndex single;
      single.len = 1;
      single.idx[0] = static_cast<std::uint8_t>(axis);
      auto merged = merge_indices(single, m);
      if (merged->second < 0) dp = -dp;
      r.add_term(merged->first, dp);
    }
  }
  return r;
}

/// Interior product contracting the first slot:
/// ι_v(p e^{i1...ik}) = p Σ_m (-1)^m v^{i_m} e^{...î_m...}.
inline KForm interior_product(const VectorField& v, const KForm& a) {
  if (a.degree() == 0) throw Error("interior product of a 0-form");
  KForm r(a.degree() - 1);
  for (const auto& [m, p] : a.terms()) {
    for (int pos = 0; pos < m.degree(); ++pos) {
      const int axis = m.axis(pos);
      const Polynomial& vc = v.component(axis);
      if (vc.is_zero()) continue;
      Polynomial contrib = p * vc;
      if (pos % 2 == 1) contrib = -contrib;
      r.add_term(m.without_position(pos), contrib);
    }
  }
  return r;
}

/// Pairing of a 1-form with a vector field: α(v) as a polynomial.
inline Polynomial pair_form_field(const KForm& alpha, const VectorField& v) {
  if (alpha.degree() != 1) throw Error("pairing requires a 1-form");
  Polynomial out;
  for (const auto& [m, p] : alpha.terms()) out += p * v.component(m.axis(0));
  return out;
}

/// Antisymmetric multilinear evaluation a(v_1,...,v_k) at a point.
inline Rational eval_form(const KForm& a, const Point& pt,
                          std::span<const VectorField> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw Error("eval_form: arity mismatch (degree " +
                std::to_string(a.degree()) + ", got " +
                std::to_string(vectors.size()) + " vectors)");
  const int k = a.degree();
  if (k == 0) return a.coefficient(MultiIndex::empty()).eval(pt);
  // Evaluate all needed vector components once.
  std::vector<std::array<Rational, kDim>> vals(vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (int i = 1; i <= kDim; ++i)
      vals[c][static_cast<std::size_t>(i - 1)] = vectors[c].component(i).eval(pt);
  Rational out(0);
  for (const auto& [m, p] : a.terms()) {
    RationalMatrix det(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        det.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            vals[static_cast<std::size_t>(c)][static_cast<std::size_t>(m.axis(r) - 1)];
    out += p.eval(pt) * det.det();
  }
  return out;
}

// Endomorphism field of the tangent bundle in the coordinate frame;
// entry (i,j) is the i-th component of the image of d/dx_j.
struct EndomorphismField {
  std::array<std::array<Polynomial, kDim>, kDim> m{};

  static EndomorphismField identity() {
    EndomorphismField e;
    for (int i = 0; i < kDim; ++i)
      e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Polynomial(1);
    return e;
  }

  const Polynomial& entry(int i, int j) const {
    return m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  Polynomial& entry(int i, int j) {
    return m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  VectorField apply(const VectorField& v) const {
    VectorField r;
    for (int i = 1; i <= kDim; ++i) {
      Polynomial acc;
      for (int j = 1; j <= kDim; ++j) acc += entry(i, j) * v.component(j);
      r.component(i) = acc;
    }
    return r;
  }

  EndomorphismField compose(const EndomorphismField& other) const {
    EndomorphismField r;
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        Polynomial acc;
        for (int k = 1; k <= kDim; ++k) acc += entry(i, k) * other.entry(k, j);
        r.entry(i, j) = acc;
      }
    return r;
  }

  friend bool operator==(const EndomorphismField&,
                         const EndomorphismField&) = default;
};

}  // namespace g2kit
