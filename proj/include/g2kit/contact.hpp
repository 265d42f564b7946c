#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/g2.hpp"
#include "g2kit/sampling.hpp"

namespace g2kit {

// Contact certificate for a 1-form: α ∧ (dα)^3 computed exactly. A nonzero
// constant top coefficient is a proof of nonvanishing; a non-constant
// coefficient is certified on the sampling grid only, and reported as the
// weaker status.
struct ContactCertificate {
  KForm alpha{1};
  KForm top{kDim};
  Verdict status = Verdict::Failed;
  std::optional<Point> witness;
  std::optional<Rational> min_abs;
  std::string note;
};

inline ContactCertificate contact_certificate(const KForm& alpha,
                                              const SamplingSpec& spec = {}) {
  if (alpha.degree() != 1) throw Error("contact certificate requires a 1-form");
  ContactCertificate cert;
  cert.alpha = alpha;
  const KForm dalpha = exterior_derivative(alpha);
  cert.top = wedge(alpha, wedge_power(dalpha, 3));
  const Polynomial p = cert.top.top_coefficient();
  Certificate c = certify_nowhere_zero(p, spec);
  cert.status = c.status;
  cert.witness = c.witness;
  cert.min_abs = c.min_abs;
  cert.note = c.note;
  return cert;
}

inline Clause certificate_clause(const std::string& name,
                                 const ContactCertificate& c) {
  Clause cl;
  cl.name = name;
  cl.verdict = c.status;
  cl.detail = c.note;
  if (c.witness) cl.witness = c.witness->to_string();
  return cl;
}

// Solves the Reeb equations ι_R dα = 0, α(R) = 1 at a point by exact
// elimination: dα there must have a one-dimensional kernel (rank 6) and α
// must not vanish on it.
inline std::array<Rational, kDim> reeb_solve(const KForm& alpha,
                                             const Point& pt) {
  if (alpha.degree() != 1) throw Error("reeb_solve requires a 1-form");
  const KForm dalpha = exterior_derivative(alpha);
  RationalMatrix m(kDim, kDim);
  for (const auto& [idx, p] : dalpha.terms()) {
    const Rational v = p.eval(pt);
    const std::size_t i = static_cast<std::size_t>(idx.axis(0) - 1);
    const std::size_t j = static_cast<std::size_t>(idx.axis(1) - 1);
    m.at(i, j) = v;
    m.at(j, i) = -v;
  }
  const auto kernel = m.nullspace();
  if (kernel.size() != 1) throw Error("dα degenerate at pt");
  Rational pairing(0);
  for (const auto& [idx, p] : alpha.terms())
    pairing += p.eval(pt) * kernel[0][static_cast<std::size_t>(idx.axis(0) - 1)];
  if (pairing.is_zero()) throw Error("α vanishes on kernel");
  std::array<Rational, kDim> r;
  for (int i = 0; i < kDim; ++i)
    r[static_cast<std::size_t>(i)] =
        kernel[0][static_cast<std::size_t>(i)] / pairing;
  return r;
}

/// Exact polynomial verification of the Reeb equations for a given field.
inline CheckReport reeb_verify(const KForm& alpha, const VectorField& r) {
  CheckReport report("Reeb equations");
  const KForm contraction = interior_product(r, exterior_derivative(alpha));
  if (contraction.is_zero())
    report.pass("ι_R dα = 0");
  else
    report.fail("ι_R dα = 0", contraction.to_string());
  const Polynomial pairing_residual = pair_form_field(alpha, r) - Polynomial(1);
  if (pairing_residual.is_zero())
    report.pass("α(R) = 1");
  else
    report.fail("α(R) = 1", pairing_residual.to_string());
  return report;
}

/// Almost contact structure: endomorphism field J, field R and 1-form α with
/// α(R) = 1 and J² = -I + α ⊗ R.
struct AlmostContactStructure {
  EndomorphismField J;
  VectorField R;
  KForm alpha{1};
};

struct AlmostContactMetricStructure {
  AlmostContactStructure acs;
  ConstantMetric g;
};

/// Matrix of α ⊗ R as an endomorphism: column j is α(e_j) R.
inline EndomorphismField tensor_alpha_r(const KForm& alpha,
                                        const VectorField& r) {
  EndomorphismField t;
  for (int j = 1; j <= kDim; ++j) {
    Polynomial aj;
    for (const auto& [m, p] : alpha.terms())
      if (m.axis(0) == j) aj = p;
    for (int i = 1; i <= kDim; ++i) t.entry(i, j) = aj * r.component(i);
  }
  return t;
}

// Exact checks of the almost contact axioms plus their consequences
// J(R) = 0 and α ∘ J = 0 (which must follow whenever the axioms hold, and
// are asserted independently).
inline CheckReport verify_acs(const EndomorphismField& J, const VectorField& r,
                              const KForm& alpha) {
  CheckReport report("almost contact structure");
  const Polynomial pairing_residual = pair_form_field(alpha, r) - Polynomial(1);
  if (pairing_residual.is_zero())
    report.pass("(i) α(R) = 1");
  else
    report.fail("(i) α(R) = 1", pairing_residual.to_string());

  const EndomorphismField jj = J.compose(J);
  const EndomorphismField expectation = tensor_alpha_r(alpha, r);
  std::string residual;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Polynomial want = expectation.entry(i, j);
      if (i == j) want -= Polynomial(1);
      const Polynomial diff = jj.entry(i, j) - want;
      if (!diff.is_zero() && residual.size() < 256)
        residual += "(" + std::to_string(i) + "," + std::to_string(j) +
                    "): " + diff.to_string() + "; ";
    }
  if (residual.empty())
    report.pass("(ii) J² = -I + α ⊗ R");
  else
    report.fail("(ii) J² = -I + α ⊗ R", residual);

  const VectorField jr = J.apply(r);
  if (jr.is_zero())
    report.pass("J(R) = 0");
  else
    report.fail("J(R) = 0", jr.to_string());

  std::string aj_residual;
  for (int j = 1; j <= kDim; ++j) {
    Polynomial acc;
    for (const auto& [m, p] : alpha.terms()) acc += p * J.entry(m.axis(0), j);
    if (!acc.is_zero() && aj_residual.size() < 256)
      aj_residual += "col " + std::to_string(j) + ": " + acc.to_string() + "; ";
  }
  if (aj_residual.empty())
    report.pass("α ∘ J = 0");
  else
    report.fail("α ∘ J = 0", aj_residual);
  return report;
}

// Builds the almost contact metric structure a G2 structure induces for a
// nowhere-zero field: R is normalized, α is its covariant form, and J is the
// cross product with R assembled columnwise. Exact mode requires ‖R‖² to be
// a constant rational square.
inline AlmostContactMetricStructure build_acms(const G2Structure& s,
                                               const VectorField& r) {
  const Polynomial nsq = norm_squared(r, s.metric());
  if (nsq.is_zero()) throw Error("vanishing field");
  if (!nsq.is_constant())
    throw Error(
        "‖R‖² is not constant; exact mode needs a constant-norm field — "
        "evaluate pointwise in numeric mode instead");
  const auto root = nsq.constant_value().sqrt_exact();
  if (!root)
    throw Error("‖R‖² = " + nsq.constant_value().to_string() +
                " is not the square of a rational; exact mode cannot "
                "normalize — evaluate pointwise in numeric mode instead");
  const VectorField unit = r.scaled(root->inverse());
  AlmostContactMetricStructure out{
      {EndomorphismField{}, unit, flat(unit, s.metric())}, s.metric()};
  for (int j = 1; j <= kDim; ++j) {
    const VectorField col = cross_product(unit, VectorField::basis(j), s);
    for (int i = 1; i <= kDim; ++i) out.acs.J.entry(i, j) = col.component(i);
  }
  CheckReport axioms = verify_acs(out.acs.J, out.acs.R, out.acs.alpha);
  if (!axioms.passed())
    throw Error("constructed structure failed its own axioms (internal)");
  return out;
}

/// Exact check of the compatible-metric equation
/// g(Ju, Jv) = g(u, v) - α(u)α(v) on all basis pairs.
inline CheckReport verify_compatible_metric(const AlmostContactMetricStructure& a) {
  CheckReport report("compatible metric");
  const auto& J = a.acs.J;
  std::array<Polynomial, kDim> alpha_comp;
  for (const auto& [m, p] : a.acs.alpha.terms())
    alpha_comp[static_cast<std::size_t>(m.axis(0) - 1)] = p;
  std::string residual;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j) {
      Polynomial lhs;
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l)
          lhs += J.entry(k, i) * J.entry(l, j) * a.g(k, l);
      Polynomial rhs = Polynomial(a.g(i, j)) -
                       alpha_comp[static_cast<std::size_t>(i - 1)] *
                           alpha_comp[static_cast<std::size_t>(j - 1)];
      const Polynomial diff = lhs - rhs;
      if (!diff.is_zero() && residual.size() < 256)
        residual += "(" + std::to_string(i) + "," + std::to_string(j) +
                    "): " + diff.to_string() + "; ";
    }
  if (residual.empty())
    report.pass("g(Ju,Jv) = g(u,v) - α(u)α(v)");
  else
    report.fail("g(Ju,Jv) = g(u,v) - α(u)α(v)", residual);
  return report;
}

// Checks whether a quadruple (J, R, α, g) is an associated almost contact
// metric structure: the compatible-metric equation, the associated-metric
// equation dα(u,v) = g(Ju,v), dα-invariance of J on Ker(α), and sampled
// positivity dα(X, JX) > 0 there. All stated equations are checked
// independently of one another. When the structure's G2 source is supplied
// and the associated-metric equation holds, the consequence dα = ι_R φ is
// asserted by direct exact comparison.
inline CheckReport verify_associated(const AlmostContactMetricStructure& a,
                                     const G2Structure* source = nullptr,
                                     const SamplingSpec& spec = {}) {
  CheckReport report("associated almost contact metric structure");
  report.absorb(verify_compatible_metric(a), "");

  const auto& J = a.acs.J;
  const KForm dalpha = exterior_derivative(a.acs.alpha);
  bool eq7_holds = true;
  {
    std::string residual;
    std::string full_residual;
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        Polynomial lhs;  // dα(e_i, e_j)
        if (i < j)
          lhs = dalpha.coefficient(MultiIndex::of({i, j}));
        else if (j < i)
          lhs = -dalpha.coefficient(MultiIndex::of({j, i}));
        Polynomial rhs;  // g(J e_i, e_j)
        for (int k = 1; k <= kDim; ++k) rhs += J.entry(k, i) * a.g(k, j);
        const Polynomial diff = lhs - rhs;
        if (!diff.is_zero()) {
          eq7_holds = false;
          if (residual.size() < 256)
            residual += "(" + std::to_string(i) + "," + std::to_string(j) +
                        "): " + diff.to_string() + "; ";
        }
      }
    if (eq7_holds)
      report.pass("dα(u,v) = g(Ju,v)");
    else
      report.fail("dα(u,v) = g(Ju,v)", residual);
  }

  // Basis of Ker(α) by projecting the frame: X_i = e_i - α(e_i) R.
  std::array<VectorField, kDim> kernel_basis;
  for (int i = 1; i <= kDim; ++i) {
    const Polynomial ai = pair_form_field(a.acs.alpha, VectorField::basis(i));
    kernel_basis[static_cast<std::size_t>(i - 1)] =
        VectorField::basis(i) - a.acs.R.scaled(ai);
  }

  auto apply_two_form = [](const KForm& f, const VectorField& u,
                           const VectorField& v) {
    Polynomial acc;
    for (const auto& [m, p] : f.terms()) {
      const int i = m.axis(0), j = m.axis(1);
      acc += p * (u.component(i) * v.component(j) -
                  u.component(j) * v.component(i));
    }
    return acc;
  };

  {
    std::string residual;
    bool ok = true;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j) {
        const VectorField& x = kernel_basis[static_cast<std::size_t>(i)];
        const VectorField& y = kernel_basis[static_cast<std::size_t>(j)];
        const Polynomial diff =
            apply_two_form(dalpha, J.apply(x), J.apply(y)) -
            apply_two_form(dalpha, x, y);
        if (!diff.is_zero()) {
          ok = false;
          if (residual.size() < 256)
            residual += "(" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "): " + diff.to_string() + "; ";
        }
      }
    if (ok)
      report.pass("dα(JX,JY) = dα(X,Y) on Ker(α)");
    else
      report.fail("dα(JX,JY) = dα(X,Y) on Ker(α)", residual);
  }

  {
    // Positivity is sampled, never proven: dα(X, JX) > 0 wherever X ≠ 0.
    std::array<Polynomial, kDim> values;
    std::array<Polynomial, kDim> gauge;  // ‖X_i‖² in the flat frame
    for (int i = 0; i < kDim; ++i) {
      const VectorField& x = kernel_basis[static_cast<std::size_t>(i)];
      values[static_cast<std::size_t>(i)] = apply_two_form(dalpha, x, J.apply(x));
      Polynomial sq;
      for (int c = 1; c <= kDim; ++c) sq += x.component(c) * x.component(c);
      gauge[static_cast<std::size_t>(i)] = sq;
    }
    bool failed = false;
    std::optional<Point> witness;
    for_each_sample(spec, [&](const Point& pt) {
      if (failed) return;
      for (int i = 0; i < kDim && !failed; ++i) {
        if (gauge[static_cast<std::size_t>(i)].is_zero()) continue;
        const Rational xsq = gauge[static_cast<std::size_t>(i)].eval(pt);
        const Rational v = values[static_cast<std::size_t>(i)].eval(pt);
        if (xsq.is_zero()) {
          if (!v.is_zero()) {
            failed = true;
            witness = pt;
          }
        } else if (!(v > Rational(0))) {
          failed = true;
          witness = pt;
        }
      }
    });
    Clause cl;
    cl.name = "dα(X,JX) > 0 on Ker(α)";
    cl.verdict = failed ? Verdict::Failed : Verdict::Sampled;
    cl.detail = failed ? "non-positive value at sample point"
                       : "positive at all sample points";
    if (witness) cl.witness = witness->to_string();
    report.add(cl);
  }

  if (source != nullptr) {
    if (eq7_holds) {
      const KForm residual =
          dalpha - interior_product(a.acs.R, source->phi());
      if (residual.is_zero())
        report.pass("consequence: dα = ι_R φ");
      else
        report.fail("consequence: dα = ι_R φ", residual.to_string());
    } else {
      report.skip("consequence: dα = ι_R φ",
                  "not asserted: dα(u,v) = g(Ju,v) failed");
    }
  }
  return report;
}

}  // namespace g2kit
