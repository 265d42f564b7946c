#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "g2kit/hodge.hpp"
#include "g2kit/report.hpp"

namespace g2kit {

/// The model 3-form e123 + e145 + e167 + e246 - e257 - e347 - e356.
inline KForm standard_phi() {
  KForm phi(3);
  phi.add_term(MultiIndex::of({1, 2, 3}), Polynomial(1));
  phi.add_term(MultiIndex::of({1, 4, 5}), Polynomial(1));
  phi.add_term(MultiIndex::of({1, 6, 7}), Polynomial(1));
  phi.add_term(MultiIndex::of({2, 4, 6}), Polynomial(1));
  phi.add_term(MultiIndex::of({2, 5, 7}), Polynomial(-1));
  phi.add_term(MultiIndex::of({3, 4, 7}), Polynomial(-1));
  phi.add_term(MultiIndex::of({3, 5, 6}), Polynomial(-1));
  return phi;
}

/// The 7-form (ι_{e_i}φ) ∧ (ι_{e_j}φ) ∧ φ, symmetric in (i, j) because
/// 2-forms commute under wedge.
inline KForm metric_volume_wedge(const KForm& phi, int i, int j) {
  const KForm wi = interior_product(VectorField::basis(i), phi);
  const KForm wj = interior_product(VectorField::basis(j), phi);
  return wedge(wedge(wi, wj), phi);
}

// Gram matrix B of a 3-form at a point, defined by
// (ι_{e_i}φ) ∧ (ι_{e_j}φ) ∧ φ = 6 B_ij e^{1...7}. For a genuine G2 form
// B = g sqrt(det g), so B carries both the metric and the volume scale.
inline RationalMatrix gram_from_phi(const KForm& phi, const Point& pt) {
  if (phi.degree() != 3) throw Error("gram_from_phi requires a 3-form");
  RationalMatrix b(kDim, kDim);
  std::array<KForm, kDim> contractions{KForm(2), KForm(2), KForm(2), KForm(2),
                                       KForm(2), KForm(2), KForm(2)};
  for (int i = 1; i <= kDim; ++i)
    contractions[static_cast<std::size_t>(i - 1)] =
        interior_product(VectorField::basis(i), phi);
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      const KForm w =
          wedge(wedge(contractions[static_cast<std::size_t>(i - 1)],
                      contractions[static_cast<std::size_t>(j - 1)]),
                phi);
      const Rational v = w.top_coefficient().eval(pt) / Rational(6);
      b.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
      b.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = v;
    }
  return b;
}

/// Numeric metric extracted from a 3-form at a point.
struct NumericMetric {
  std::array<std::array<double, kDim>, kDim> g{};
  double vol_scale = 0.0;  // sqrt(det g)
};

// Floating-point assistant for discovering the metric a 3-form induces:
// g = det(B)^{-1/9} B with B the Gram matrix above, the unique positive
// normalization consistent with the metric-volume identity in dimension 7.
// The returned volume scale is sqrt(det g) = det(B)^{1/9}.
inline NumericMetric metric_from_phi(const KForm& phi, const Point& pt) {
  const RationalMatrix b = gram_from_phi(phi, pt);
  // Positive definiteness of B via leading principal minors, exactly.
  for (std::size_t k = 1; k <= kDim; ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = b.at(i, j);
    if (!(minor.det() > Rational(0)))
      throw Error("not a G2 3-form at this point");
  }
  const double det_b = b.det().to_double();
  NumericMetric out;
  const double scale = std::pow(det_b, -1.0 / 9.0);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      out.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          scale * b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                      .to_double();
  out.vol_scale = std::pow(det_b, 1.0 / 9.0);
  return out;
}

// Exact check of the metric-volume identity
// (ι_{e_i}φ) ∧ (ι_{e_j}φ) ∧ φ = 6 g_ij vol on all 28 basis pairs.
inline CheckReport verify_metric_compat(const KForm& phi,
                                        const ConstantMetric& g,
                                        const KForm& vol) {
  CheckReport report("metric compatibility");
  int failures = 0;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      const KForm lhs = metric_volume_wedge(phi, i, j);
      const KForm rhs = vol.scaled(Rational(6) * g(i, j));
      const KForm residual = lhs - rhs;
      if (!residual.is_zero()) {
        ++failures;
        report.fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    residual.to_string());
      }
    }
  if (failures == 0)
    report.pass("metric-volume identity on all 28 basis pairs");
  return report;
}

// A verified G2 structure on the chart: the 3-form together with its
// declared constant metric, orientation and volume form. Construction
// re-derives the volume form and proves the metric-volume identity exactly;
// a failing declaration is rejected rather than silently reoriented.
class G2Structure {
 public:
  G2Structure(KForm phi, ConstantMetric metric, int orientation)
      : phi_(std::move(phi)),
        metric_(std::move(metric)),
        orientation_(orientation),
        vol_(volume_form(metric_, orientation_)),
        star_phi_(hodge_star(phi_, metric_, orientation_)) {
    if (orientation != 1 && orientation != -1)
      throw Error("orientation must be +1 or -1");
    if (phi_.degree() != 3) throw Error("a G2 structure needs a 3-form");
    CheckReport compat = verify_metric_compat(phi_, metric_, vol_);
    if (!compat.passed())
      throw Error(
          "declared metric/orientation fail the metric-volume identity: " +
          compat.clauses().front().name);
  }

  static G2Structure standard() {
    return G2Structure(standard_phi(), ConstantMetric::identity(), 1);
  }

  const KForm& phi() const { return phi_; }
  const ConstantMetric& metric() const { return metric_; }
  const KForm& vol() const { return vol_; }
  const KForm& star_phi() const { return star_phi_; }
  int orientation() const { return orientation_; }

  KForm star(const KForm& a) const {
    return hodge_star(a, metric_, orientation_);
  }

 private:
  KForm phi_;
  ConstantMetric metric_;
  int orientation_;
  KForm vol_;
  KForm star_phi_;
};

// Cross product defined by φ(u,v,w) = g(u × v, w):
// (u × v)^k = Σ_l g^{kl} φ(u, v, e_l), exact for declared rational metrics.
inline VectorField cross_product(const VectorField& u, const VectorField& v,
                                 const G2Structure& s) {
  const KForm contracted = interior_product(v, interior_product(u, s.phi()));
  VectorField out;
  for (int k = 1; k <= kDim; ++k) {
    Polynomial acc;
    for (const auto& [m, p] : contracted.terms())
      acc += p * s.metric().inverse(k, m.axis(0));
    out.component(k) = acc;
  }
  return out;
}

/// Exact zero tests of dφ and d(*φ); both true characterizes torsion-free.
inline std::pair<bool, bool> torsion_flags(const G2Structure& s) {
  return {exterior_derivative(s.phi()).is_zero(),
          exterior_derivative(s.star_phi()).is_zero()};
}

/// The two G2-irreducible pieces of a 2-form.
struct Lambda2Split {
  KForm part7;
  KForm part14;
};

// Splits a 2-form along Λ² = Λ²_7 ⊕ Λ²_14. With this library's sign
// conventions (interior product on the first slot, λ ∧ *μ = <λ,μ> Vol, and
// the orientation pinned by the metric-volume identity) the operator
// β ↦ *(φ ∧ β) has eigenvalue +2 on Λ²_7 = {ι_v φ} and -1 on
// Λ²_14 = {β : *φ ∧ β = 0}, hence these projections.
inline Lambda2Split project_lambda2(const KForm& beta, const G2Structure& s) {
  if (beta.degree() != 2) throw Error("lambda2 projection requires a 2-form");
  const KForm t = s.star(wedge(s.phi(), beta));
  const Rational third(1, 3);
  Lambda2Split split{(beta + t).scaled(third),
                     (beta.scaled(Rational(2)) - t).scaled(third)};
  return split;
}

}  // namespace g2kit
