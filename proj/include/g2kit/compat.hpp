#pragma once

#include <string>
#include <utility>

#include "g2kit/contact.hpp"

namespace g2kit {

using CompatReport = CheckReport;

// Contact-G2 structure: a quintuple (φ, R, α, f, g) with f, g nowhere-zero,
// α(R) = f and d(g α) = ι_R φ. The checker below verifies every clause; this
// aggregate carries the data.
struct ContactG2Structure {
  G2Structure s;
  VectorField R;
  KForm alpha{1};
  Polynomial f;
  Polynomial g_fn;
};

/// Constructs the quintuple, rejecting scale functions with a certified zero.
inline ContactG2Structure make_contact_g2(G2Structure s, VectorField r,
                                          KForm alpha, Polynomial f,
                                          Polynomial g_fn,
                                          const SamplingSpec& spec = {}) {
  if (certify_nowhere_zero(f, spec).status == Verdict::Failed)
    throw Error("contact-G2 structure: f has a certified zero");
  if (certify_nowhere_zero(g_fn, spec).status == Verdict::Failed)
    throw Error("contact-G2 structure: g has a certified zero");
  return ContactG2Structure{std::move(s), std::move(r), std::move(alpha),
                            std::move(f), std::move(g_fn)};
}

// A-compatibility of a contact structure with a G2 structure: dα = ι_R φ
// for a contact form α, with a rescaling of R serving as Reeb field. The
// existential scaling is discharged constructively: dα = ι_R φ forces
// ι_R dα = 0, so f = 1/α(R) works as soon as α(R) vanishes nowhere.
inline CompatReport check_a_compatible(const G2Structure& s, const KForm& alpha,
                                       const VectorField& r,
                                       const SamplingSpec& spec = {}) {
  CompatReport report("a_compatible");
  const KForm dalpha = exterior_derivative(alpha);
  const KForm residual = interior_product(r, s.phi()) - dalpha;
  if (residual.is_zero())
    report.pass("dα = ι_R φ");
  else
    report.fail("dα = ι_R φ", residual.to_string());

  const Polynomial pairing = pair_form_field(alpha, r);
  const Certificate cert = certify_nowhere_zero(pairing, spec);
  report.add(certificate_clause("α(R) nowhere-zero", cert));

  const ContactCertificate contact = contact_certificate(alpha, spec);
  report.add(certificate_clause("α ∧ (dα)³ nowhere-zero", contact));
  report.add_derived("contact_volume", contact.top.to_string());
  report.add_derived("reeb_field", r.to_string());
  if (report.passed()) {
    if (pairing.is_constant())
      report.add_derived("f", pairing.constant_value().inverse().to_string());
    else
      report.add_derived("f", "1/(" + pairing.to_string() + ")");
  }
  return report;
}

/// B-compatibility: α = ι_Y ι_X φ is a contact form.
inline CompatReport check_b_compatible(const G2Structure& s, const KForm& alpha,
                                       const VectorField& x,
                                       const VectorField& y,
                                       const SamplingSpec& spec = {}) {
  CompatReport report("b_compatible");
  const KForm produced = interior_product(y, interior_product(x, s.phi()));
  const KForm residual = produced - alpha;
  if (residual.is_zero())
    report.pass("α = ι_Y ι_X φ");
  else
    report.fail("α = ι_Y ι_X φ", residual.to_string());
  const ContactCertificate contact = contact_certificate(alpha, spec);
  report.add(certificate_clause("α ∧ (dα)³ nowhere-zero", contact));
  report.add_derived("contact_volume", contact.top.to_string());
  return report;
}

// Verifies a contact-G2 structure: both defining clauses exactly, the
// volume identity α' ∧ (dα')³ = 6 f g ‖R‖² Vol for α' = g α, the Reeb
// equations for R' = R/(fg) (symbolically when fg is constant, pointwise
// otherwise), and, in reverse, the A-compatibility the structure induces.
inline CompatReport check_contact_g2(const ContactG2Structure& c,
                                     const SamplingSpec& spec = {}) {
  CompatReport report("contact_g2");
  const ConstantMetric& g = c.s.metric();

  report.add(certificate_clause("f nowhere-zero",
                                certify_nowhere_zero(c.f, spec)));
  report.add(certificate_clause("g nowhere-zero",
                                certify_nowhere_zero(c.g_fn, spec)));

  const Polynomial pairing_residual = pair_form_field(c.alpha, c.R) - c.f;
  if (pairing_residual.is_zero())
    report.pass("(i) α(R) = f");
  else
    report.fail("(i) α(R) = f", pairing_residual.to_string());

  const KForm alpha_prime = c.alpha.scaled(c.g_fn);
  const KForm dalpha_prime = exterior_derivative(alpha_prime);
  const KForm clause2_residual =
      dalpha_prime - interior_product(c.R, c.s.phi());
  if (clause2_residual.is_zero())
    report.pass("(ii) d(g α) = ι_R φ");
  else
    report.fail("(ii) d(g α) = ι_R φ", clause2_residual.to_string());

  const KForm top = wedge(alpha_prime, wedge_power(dalpha_prime, 3));
  const Polynomial scale =
      Polynomial(Rational(6)) * c.f * c.g_fn * norm_squared(c.R, g);
  const KForm volume_residual = top - c.s.vol().scaled(scale);
  if (volume_residual.is_zero())
    report.pass("α' ∧ (dα')³ = 6 f g ‖R‖² Vol");
  else
    report.fail("α' ∧ (dα')³ = 6 f g ‖R‖² Vol", volume_residual.to_string());
  report.add_derived("contact_volume", top.to_string());

  const Polynomial fg = c.f * c.g_fn;
  if (fg.is_constant() && !fg.constant_value().is_zero()) {
    const VectorField r_prime = c.R.scaled(fg.constant_value().inverse());
    const KForm contraction = interior_product(r_prime, dalpha_prime);
    const Polynomial unit_residual =
        pair_form_field(alpha_prime, r_prime) - Polynomial(1);
    if (contraction.is_zero() && unit_residual.is_zero())
      report.pass("R' = R/(fg) is the Reeb field of α'");
    else
      report.fail("R' = R/(fg) is the Reeb field of α'",
                  contraction.is_zero() ? unit_residual.to_string()
                                        : contraction.to_string());
    report.add_derived("reeb_field", r_prime.to_string());
  } else if (fg.is_zero()) {
    report.fail("R' = R/(fg) is the Reeb field of α'", "fg = 0");
  } else {
    // fg is a non-constant scale: check the Reeb equations pointwise.
    const KForm contraction = interior_product(c.R, dalpha_prime);
    const Polynomial pairing = pair_form_field(alpha_prime, c.R);
    bool failed = false;
    std::optional<Point> witness;
    for_each_sample(spec, [&](const Point& pt) {
      if (failed) return;
      const Rational fg_val = fg.eval(pt);
      if (fg_val.is_zero()) return;  // covered by the certificates above
      for (const auto& [m, p] : contraction.terms()) {
        (void)m;
        if (!p.eval(pt).is_zero()) {
          failed = true;
          witness = pt;
          return;
        }
      }
      if (!(pairing.eval(pt) / fg_val == Rational(1))) {
        failed = true;
        witness = pt;
      }
    });
    Clause cl;
    cl.name = "R' = R/(fg) is the Reeb field of α'";
    cl.verdict = failed ? Verdict::Failed : Verdict::Sampled;
    cl.detail = failed ? "Reeb equations fail at sample point"
                       : "Reeb equations hold at all sample points";
    if (witness) cl.witness = witness->to_string();
    report.add(cl);
  }

  report.absorb(check_a_compatible(c.s, alpha_prime, c.R, spec), "induced ");
  return report;
}

// Checker for the vector-triple hypotheses ι_Z φ = Y♭ ∧ X♭ and
// d(ι_X ι_Y φ) = ι_X ι_Y *φ. When both hold the conclusions are asserted
// exactly for α = Z♭: dα = (2/3) ι_Z φ and α ∧ (dα)³ = (16/9) ‖Z‖⁴ Vol
// (signs in this library's conventions; the +2 eigenvalue of β ↦ *(φ∧β) on
// {ι_v φ} propagates through the chain). When the first hypothesis fails,
// the decomposability diagnostic is reported: (ι_Z φ)² ∧ φ equals
// 6‖Z‖² Vol and can never match (Y♭ ∧ X♭)² ∧ φ = 0 for nowhere-zero Z.
inline CompatReport check_vector_triple(const G2Structure& s,
                                        const VectorField& x,
                                        const VectorField& y,
                                        const VectorField& z,
                                        const SamplingSpec& spec = {}) {
  CompatReport report("vector_triple");
  report.add(certificate_clause(
      "X nowhere-zero", certify_nowhere_zero(x, s.metric(), spec)));
  report.add(certificate_clause(
      "Y nowhere-zero", certify_nowhere_zero(y, s.metric(), spec)));
  report.add(certificate_clause(
      "Z nowhere-zero", certify_nowhere_zero(z, s.metric(), spec)));

  const KForm iz_phi = interior_product(z, s.phi());
  const KForm decomposable = wedge(flat(y, s.metric()), flat(x, s.metric()));
  const KForm h1_residual = iz_phi - decomposable;
  const bool h1 = h1_residual.is_zero();
  if (h1)
    report.pass("H1: ι_Z φ = Y♭ ∧ X♭");
  else
    report.fail("H1: ι_Z φ = Y♭ ∧ X♭", h1_residual.to_string());

  const KForm lhs2 =
      exterior_derivative(interior_product(x, interior_product(y, s.phi())));
  const KForm rhs2 = interior_product(x, interior_product(y, s.star_phi()));
  const KForm h2_residual = lhs2 - rhs2;
  const bool h2 = h2_residual.is_zero();
  if (h2)
    report.pass("H2: d(ι_X ι_Y φ) = ι_X ι_Y *φ");
  else
    report.fail("H2: d(ι_X ι_Y φ) = ι_X ι_Y *φ", h2_residual.to_string());

  if (h1 && h2) {
    const KForm alpha = flat(z, s.metric());
    const KForm dalpha = exterior_derivative(alpha);
    const KForm c1_residual = dalpha - iz_phi.scaled(Rational(2, 3));
    if (c1_residual.is_zero())
      report.pass("conclusion: dα = (2/3) ι_Z φ");
    else
      report.fail("conclusion: dα = (2/3) ι_Z φ", c1_residual.to_string());
    const Polynomial zsq = norm_squared(z, s.metric());
    const KForm top = wedge(alpha, wedge_power(dalpha, 3));
    const KForm c2_residual =
        top - s.vol().scaled(Polynomial(Rational(16, 9)) * zsq * zsq);
    if (c2_residual.is_zero())
      report.pass("conclusion: α ∧ (dα)³ = (16/9) ‖Z‖⁴ Vol");
    else
      report.fail("conclusion: α ∧ (dα)³ = (16/9) ‖Z‖⁴ Vol",
                  c2_residual.to_string());
  } else {
    report.skip("conclusion: dα = (2/3) ι_Z φ", "not asserted: hypotheses failed");
    report.skip("conclusion: α ∧ (dα)³ = (16/9) ‖Z‖⁴ Vol",
                "not asserted: hypotheses failed");
    if (!h1) {
      const KForm diag_lhs = wedge(wedge(iz_phi, iz_phi), s.phi());
      const KForm diag_rhs = wedge(wedge(decomposable, decomposable), s.phi());
      report.skip("decomposability diagnostic",
                  "(ι_Z φ)² ∧ φ = " + diag_lhs.to_string() + " versus (Y♭ ∧ X♭)² ∧ φ = " +
                      diag_rhs.to_string());
      report.add_derived("diagnostic_contraction_square", diag_lhs.to_string());
      report.add_derived("diagnostic_decomposable_square", diag_rhs.to_string());
    }
  }
  return report;
}

// Randomized exact identity suite on a G2 structure: for each trial with
// fresh constant rational fields it asserts, with zero tolerance,
//   (a) ι_X ι_Y *φ = -*(X♭ ∧ Y♭ ∧ φ)
//   (b) ι_X ι_Y φ  =  *(Y♭ ∧ X♭ ∧ *φ)
//   (c) (ι_v φ) ∧ *φ = 3 *(v♭)
//   (d) (ι_u φ) ∧ (ι_v φ) ∧ φ = 6 g(u,v) Vol
//   (e) u × (u × v) = -‖u‖² v + g(u,v) u
inline CompatReport identity_suite(const G2Structure& s, int trials,
                                   std::uint64_t seed = kDefaultSeed) {
  CompatReport report("identity_suite");
  SplitMix64 rng(seed);
  const ConstantMetric& g = s.metric();
  int first_failure[5] = {0, 0, 0, 0, 0};
  std::string witness[5];

  for (int t = 1; t <= trials; ++t) {
    const VectorField x = random_constant_field(rng);
    const VectorField y = random_constant_field(rng);
    const VectorField u = random_constant_field(rng);
    const VectorField v = random_constant_field(rng);

    if (!first_failure[0]) {
      const KForm lhs = interior_product(x, interior_product(y, s.star_phi()));
      const KForm rhs = s.star(wedge(flat(x, g), wedge(flat(y, g), s.phi())));
      if (!(lhs == -rhs)) {
        first_failure[0] = t;
        witness[0] = "X = " + x.to_string() + ", Y = " + y.to_string();
      }
    }
    if (!first_failure[1]) {
      const KForm lhs = interior_product(x, interior_product(y, s.phi()));
      const KForm rhs =
          s.star(wedge(flat(y, g), wedge(flat(x, g), s.star_phi())));
      if (!(lhs == rhs)) {
        first_failure[1] = t;
        witness[1] = "X = " + x.to_string() + ", Y = " + y.to_string();
      }
    }
    if (!first_failure[2]) {
      const KForm lhs = wedge(interior_product(v, s.phi()), s.star_phi());
      const KForm rhs = s.star(flat(v, g)).scaled(Rational(3));
      if (!(lhs == rhs)) {
        first_failure[2] = t;
        witness[2] = "v = " + v.to_string();
      }
    }
    if (!first_failure[3]) {
      const KForm lhs = wedge(
          wedge(interior_product(u, s.phi()), interior_product(v, s.phi())),
          s.phi());
      const KForm rhs =
          s.vol().scaled(Polynomial(Rational(6)) * metric_pairing(u, v, g));
      if (!(lhs == rhs)) {
        first_failure[3] = t;
        witness[3] = "u = " + u.to_string() + ", v = " + v.to_string();
      }
    }
    if (!first_failure[4]) {
      const VectorField lhs = cross_product(u, cross_product(u, v, s), s);
      const VectorField rhs =
          v.scaled(-norm_squared(u, g)) + u.scaled(metric_pairing(u, v, g));
      if (!(lhs == rhs)) {
        first_failure[4] = t;
        witness[4] = "u = " + u.to_string() + ", v = " + v.to_string();
      }
    }
  }

  const std::string names[5] = {
      "ι_X ι_Y *φ = -*(X♭ ∧ Y♭ ∧ φ)", "ι_X ι_Y φ = *(Y♭ ∧ X♭ ∧ *φ)",
      "(ι_v φ) ∧ *φ = 3 *(v♭)", "(ι_u φ) ∧ (ι_v φ) ∧ φ = 6 g(u,v) Vol",
      "u × (u × v) = -‖u‖² v + g(u,v) u"};
  for (int i = 0; i < 5; ++i) {
    if (first_failure[i] == 0)
      report.pass(names[i], std::to_string(trials) + "/" +
                                std::to_string(trials) + " trials exact");
    else
      report.fail(names[i], witness[i],
                  "first failure at trial " + std::to_string(first_failure[i]));
  }
  report.add_derived("trials", std::to_string(trials));
  report.add_derived("seed", std::to_string(seed));
  return report;
}

}  // namespace g2kit
