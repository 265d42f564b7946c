#pragma once

#include <vector>

#include "g2kit/forms.hpp"
#include "g2kit/metric.hpp"

namespace g2kit {

/// Covariant 1-form of a field: flat(v)(w) = g(v, w).
inline KForm flat(const VectorField& v, const ConstantMetric& g) {
  KForm a(1);
  for (int i = 1; i <= kDim; ++i) {
    Polynomial acc;
    for (int j = 1; j <= kDim; ++j) acc += v.component(j) * g(i, j);
    if (!acc.is_zero()) a.add_term(MultiIndex::of({i}), acc);
  }
  return a;
}

/// Inverse of flat on 1-forms.
inline VectorField sharp(const KForm& a, const ConstantMetric& g) {
  if (a.degree() != 1) throw Error("sharp requires a 1-form");
  VectorField v;
  for (int k = 1; k <= kDim; ++k) {
    Polynomial acc;
    for (const auto& [m, p] : a.terms()) acc += p * g.inverse(k, m.axis(0));
    v.component(k) = acc;
  }
  return v;
}

/// g(u, v) as a polynomial.
inline Polynomial metric_pairing(const VectorField& u, const VectorField& v,
                                 const ConstantMetric& g) {
  Polynomial acc;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      acc += u.component(i) * v.component(j) * g(i, j);
  return acc;
}

inline Polynomial norm_squared(const VectorField& v, const ConstantMetric& g) {
  return metric_pairing(v, v, g);
}

inline Rational require_sqrt_det(const ConstantMetric& g) {
  if (!g.sqrt_det())
    throw Error(
        "sqrt(det g) is irrational; the exact Hodge star is unavailable for "
        "this metric — use the pointwise numeric path instead");
  return *g.sqrt_det();
}

/// Vol_g = sqrt(det g) * orientation * e^{1...7}.
inline KForm volume_form(const ConstantMetric& g, int orientation) {
  KForm vol(kDim);
  vol.add_term(MultiIndex::full(),
               Polynomial(require_sqrt_det(g) * Rational(orientation)));
  return vol;
}

namespace detail {

/// All strictly increasing multi-indices of a given length.
inline const std::vector<MultiIndex>& index_basis(int k) {
  static const std::vector<std::vector<MultiIndex>> all = [] {
    std::vector<std::vector<MultiIndex>> out(kDim + 1);
    for (int mask = 0; mask < (1 << kDim); ++mask) {
      std::vector<int> axes;
      for (int a = 1; a <= kDim; ++a)
        if (mask & (1 << (a - 1))) axes.push_back(a);
      out[axes.size()].push_back(*MultiIndex::make(axes));
    }
    return out;
  }();
  return all[static_cast<std::size_t>(k)];
}

/// Induced inner product of basis k-forms: det of the inverse-metric minor.
inline Rational basis_inner_product(const MultiIndex& a, const MultiIndex& b,
                                    const ConstantMetric& g) {
  const int k = a.degree();
  if (k == 0) return Rational(1);
  RationalMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          g.inverse(a.axis(r), b.axis(c));
  return m.det();
}

/// Sign s with e^I ∧ e^{I^c} = s * e^{1...7}.
inline int complement_sign(const MultiIndex& m) {
  auto merged = merge_indices(m, m.complement());
  return merged->second;
}

}  // namespace detail

// Hodge star for the given constant metric and orientation, defined by
// λ ∧ *μ = <λ, μ>_g Vol_g. Exact mode requires a rational sqrt(det g).
inline KForm hodge_star(const KForm& a, const ConstantMetric& g,
                        int orientation) {
  const Rational scale = require_sqrt_det(g) * Rational(orientation);
  const int k = a.degree();
  KForm r(kDim - k);
  if (g.is_identity()) {
    for (const auto& [m, p] : a.terms()) {
      Polynomial c = p * scale;
      if (detail::complement_sign(m) < 0) c = -c;
      r.add_term(m.complement(), c);
    }
    return r;
  }
  for (const auto& probe : detail::index_basis(k)) {
    Polynomial c;
    for (const auto& [m, p] : a.terms()) {
      Rational ip = detail::basis_inner_product(probe, m, g);
      if (!ip.is_zero()) c += p * ip;
    }
    if (c.is_zero()) continue;
    c = c * scale;
    if (detail::complement_sign(probe) < 0) c = -c;
    r.add_term(probe.complement(), c);
  }
  return r;
}

}  // namespace g2kit
