#include <doctest.h>

#include "g2kit/compat.hpp"
#include "test_support.hpp"

using namespace g2kit;

namespace {

Polynomial x(int axis) { return Polynomial::variable(axis); }

KForm alpha0() {
  KForm a(1);
  a.add_term(MultiIndex::of({1}), Polynomial(1));
  a.add_term(MultiIndex::of({2}), -x(3));
  a.add_term(MultiIndex::of({4}), -x(5));
  a.add_term(MultiIndex::of({6}), -x(7));
  return a;
}

// The rotated A/B-compatible pair: alpha = dx2 + x3 dx1 - x6 dx4 + x7 dx5.
KForm alpha_second() {
  KForm a(1);
  a.add_term(MultiIndex::of({2}), Polynomial(1));
  a.add_term(MultiIndex::of({1}), x(3));
  a.add_term(MultiIndex::of({4}), -x(6));
  a.add_term(MultiIndex::of({5}), x(7));
  return a;
}

VectorField y_standard() {
  return VectorField::basis(1).scaled(-x(7)) +
         VectorField::basis(3).scaled(x(5)) -
         VectorField::basis(5).scaled(x(3)) - VectorField::basis(6);
}

VectorField y_second() {
  return VectorField::basis(5) - VectorField::basis(6).scaled(x(3)) +
         VectorField::basis(3).scaled(x(6)) -
         VectorField::basis(2).scaled(x(7));
}

SamplingSpec quick_spec() {
  SamplingSpec spec;
  spec.grid_resolution = 3;
  spec.random_points = 16;
  return spec;
}

const Clause* find_clause(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.clauses())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("a-compatibility") {
  TEST_CASE("the motivating pair (alpha0, d/dx1) passes with f = 1") {
    const G2Structure s = G2Structure::standard();
    const CompatReport r =
        check_a_compatible(s, alpha0(), VectorField::basis(1), quick_spec());
    CHECK(r.passed());
    bool saw_f = false;
    for (const auto& [k, v] : r.derived())
      if (k == "f") {
        saw_f = true;
        CHECK(v == "1");
      }
    CHECK(saw_f);
  }

  TEST_CASE("the rotated pair (alpha, d/dx2) passes") {
    const G2Structure s = G2Structure::standard();
    CHECK(check_a_compatible(s, alpha_second(), VectorField::basis(2),
                             quick_spec())
              .passed());
  }

  TEST_CASE("wrong field fails the contraction clause with the residual") {
    const G2Structure s = G2Structure::standard();
    const CompatReport r =
        check_a_compatible(s, alpha0(), VectorField::basis(2), quick_spec());
    CHECK(!r.passed());
    const Clause* c = find_clause(r, "dα = ι_R φ");
    REQUIRE(c);
    CHECK(c->verdict == Verdict::Failed);
    const KForm expected = interior_product(VectorField::basis(2),
                                            standard_phi()) -
                           exterior_derivative(alpha0());
    CHECK(c->residual == expected.to_string());
  }
}

TEST_SUITE("b-compatibility") {
  TEST_CASE("the motivating pair passes") {
    const G2Structure s = G2Structure::standard();
    CHECK(check_b_compatible(s, alpha0(), VectorField::basis(7), y_standard(),
                             quick_spec())
              .passed());
  }

  TEST_CASE("gauge freedom: Y + x1 d/dx7 still passes") {
    const G2Structure s = G2Structure::standard();
    const VectorField y = y_standard() + VectorField::basis(7).scaled(x(1));
    CHECK(check_b_compatible(s, alpha0(), VectorField::basis(7), y,
                             quick_spec())
              .passed());
  }

  TEST_CASE("the rotated pair passes") {
    const G2Structure s = G2Structure::standard();
    CHECK(check_b_compatible(s, alpha_second(), VectorField::basis(7),
                             y_second(), quick_spec())
              .passed());
  }

  TEST_CASE("mismatched form fails: iota_2 iota_1 phi0 = dx3") {
    const G2Structure s = G2Structure::standard();
    const CompatReport r = check_b_compatible(
        s, KForm::dx(1), VectorField::basis(1), VectorField::basis(2),
        quick_spec());
    CHECK(!r.passed());
    const Clause* c = find_clause(r, "α = ι_Y ι_X φ");
    REQUIRE(c);
    const KForm expected = KForm::dx(3) - KForm::dx(1);
    CHECK(c->residual == expected.to_string());
  }
}

TEST_SUITE("contact-g2 structures") {
  TEST_CASE("the standard tuple (phi0, d/dx1, alpha0, 1, 1)") {
    const G2Structure s = G2Structure::standard();
    const ContactG2Structure c = make_contact_g2(
        s, VectorField::basis(1), alpha0(), Polynomial(1), Polynomial(1));
    const CompatReport r = check_contact_g2(c, quick_spec());
    CHECK(r.passed());
    KForm expected(7);
    expected.add_term(MultiIndex::full(), Polynomial(6));
    bool saw_volume = false;
    for (const auto& [k, v] : r.derived())
      if (k == "contact_volume") {
        saw_volume = true;
        CHECK(v == expected.to_string());
      }
    CHECK(saw_volume);
  }

  TEST_CASE("g = -3/2 breaks clause (ii) with residual -5/2 iota_R phi") {
    const G2Structure s = G2Structure::standard();
    const ContactG2Structure c =
        make_contact_g2(s, VectorField::basis(1), alpha0(), Polynomial(1),
                        Polynomial(Rational(-3, 2)));
    const CompatReport r = check_contact_g2(c, quick_spec());
    CHECK(!r.passed());
    const Clause* ci = find_clause(r, "(i) α(R) = f");
    REQUIRE(ci);
    CHECK(ci->verdict == Verdict::Pass);
    const Clause* cii = find_clause(r, "(ii) d(g α) = ι_R φ");
    REQUIRE(cii);
    CHECK(cii->verdict == Verdict::Failed);
    const KForm expected =
        interior_product(VectorField::basis(1), standard_phi())
            .scaled(Rational(-5, 2));
    CHECK(cii->residual == expected.to_string());
    // The Reeb clause for R' = R/(fg) happens to hold.
    const Clause* reeb = find_clause(r, "R' = R/(fg) is the Reeb field of α'");
    REQUIRE(reeb);
    CHECK(reeb->verdict == Verdict::Pass);
  }

  TEST_CASE("certified-zero scale functions are rejected at construction") {
    const G2Structure s = G2Structure::standard();
    CHECK_THROWS_AS(make_contact_g2(s, VectorField::basis(1), alpha0(), x(3),
                                    Polynomial(1), quick_spec()),
                    Error);
    CHECK_THROWS_AS(make_contact_g2(s, VectorField::basis(1), alpha0(),
                                    Polynomial(1), Polynomial(), quick_spec()),
                    Error);
  }

  TEST_CASE("non-constant f: alpha0 + d(x1 x3^2) with f = 1 + x3^2") {
    const G2Structure s = G2Structure::standard();
    KForm dh(1);
    dh.add_term(MultiIndex::of({1}), x(3) * x(3));
    dh.add_term(MultiIndex::of({3}), Polynomial(2) * x(1) * x(3));
    const KForm alpha = alpha0() + dh;
    const Polynomial f = Polynomial(1) + x(3) * x(3);
    const ContactG2Structure c = make_contact_g2(
        s, VectorField::basis(1), alpha, f, Polynomial(1), quick_spec());
    const CompatReport r = check_contact_g2(c, quick_spec());
    CHECK(r.passed());
    CHECK(r.has_sampled());  // f's certificate and the pointwise Reeb clause
    const Clause* reeb = find_clause(r, "R' = R/(fg) is the Reeb field of α'");
    REQUIRE(reeb);
    CHECK(reeb->verdict == Verdict::Sampled);
    const Clause* vol = find_clause(r, "α' ∧ (dα')³ = 6 f g ‖R‖² Vol");
    REQUIRE(vol);
    CHECK(vol->verdict == Verdict::Pass);
  }

  TEST_CASE("every passing a-compatibility induces a contact-g2 structure") {
    const G2Structure s = G2Structure::standard();
    const struct {
      KForm alpha;
      VectorField r;
    } cases[] = {{alpha0(), VectorField::basis(1)},
                 {alpha_second(), VectorField::basis(2)}};
    for (const auto& [alpha, r] : cases) {
      const CompatReport a = check_a_compatible(s, alpha, r, quick_spec());
      REQUIRE(a.passed());
      const Polynomial f = pair_form_field(alpha, r);
      const ContactG2Structure c =
          make_contact_g2(s, r, alpha, f, Polynomial(1), quick_spec());
      CHECK(check_contact_g2(c, quick_spec()).passed());
    }
  }

  TEST_CASE("whenever contact-g2 passes, the scaled pair is a-compatible") {
    const G2Structure s = G2Structure::standard();
    const ContactG2Structure c =
        make_contact_g2(s, VectorField::basis(1), alpha0().scaled(Rational(-2)),
                        Polynomial(-2), Polynomial(Rational(-1, 2)));
    const CompatReport r = check_contact_g2(c, quick_spec());
    CHECK(r.passed());
    CHECK(check_a_compatible(s, c.alpha.scaled(c.g_fn), c.R, quick_spec())
              .passed());
  }
}

TEST_SUITE("closed-manifold integrand") {
  TEST_CASE("dα ∧ dα ∧ φ = 6 ‖R‖² Vol whenever dα = ι_R φ by construction") {
    const G2Structure s = G2Structure::standard();
    SplitMix64 rng(431);
    for (int t = 0; t < 60; ++t) {
      const VectorField r = random_constant_field(rng);
      // Antidifferentiate the constant 2-form iota_R phi: beta_ij x_i dx_j.
      const KForm beta = interior_product(r, s.phi());
      KForm alpha(1);
      for (const auto& [m, p] : beta.terms())
        alpha.add_term(MultiIndex::of({m.axis(1)}),
                       p * Polynomial::variable(m.axis(0)));
      const KForm dalpha = exterior_derivative(alpha);
      REQUIRE(dalpha == beta);
      const KForm lhs = wedge(wedge(dalpha, dalpha), s.phi());
      const KForm rhs =
          s.vol().scaled(Polynomial(Rational(6)) * norm_squared(r, s.metric()));
      CHECK(lhs == rhs);
    }
  }
}

TEST_SUITE("vector triple checker") {
  TEST_CASE("the frame triple fails H1 with the decomposability diagnostic") {
    const G2Structure s = G2Structure::standard();
    const CompatReport r =
        check_vector_triple(s, VectorField::basis(7), VectorField::basis(6),
                            VectorField::basis(1), quick_spec());
    CHECK(!r.passed());
    const Clause* h1 = find_clause(r, "H1: ι_Z φ = Y♭ ∧ X♭");
    REQUIRE(h1);
    CHECK(h1->verdict == Verdict::Failed);
    // e23 + e45 is the residual: iota_1 phi0 minus e67.
    KForm expected(2);
    expected.add_term(MultiIndex::of({2, 3}), Polynomial(1));
    expected.add_term(MultiIndex::of({4, 5}), Polynomial(1));
    CHECK(h1->residual == expected.to_string());
    // Conclusions are skipped, not asserted.
    for (const auto& c : r.clauses())
      if (c.name.rfind("conclusion", 0) == 0)
        CHECK(c.verdict == Verdict::Skipped);
    // Diagnostic: contraction square is 6 e1234567, decomposable square 0.
    KForm six(7);
    six.add_term(MultiIndex::full(), Polynomial(6));
    bool lhs_seen = false, rhs_seen = false;
    for (const auto& [k, v] : r.derived()) {
      if (k == "diagnostic_contraction_square") {
        lhs_seen = true;
        CHECK(v == six.to_string());
      }
      if (k == "diagnostic_decomposable_square") {
        rhs_seen = true;
        CHECK(v == "0");
      }
    }
    CHECK(lhs_seen);
    CHECK(rhs_seen);
  }

  TEST_CASE("generic constant triples: contraction square never decomposable") {
    const G2Structure s = G2Structure::standard();
    SplitMix64 rng(433);
    for (int t = 0; t < 30; ++t) {
      const VectorField z = random_constant_field(rng);
      if (norm_squared(z, s.metric()).is_zero()) continue;
      const KForm beta = interior_product(z, s.phi());
      const KForm square = wedge(wedge(beta, beta), s.phi());
      const KForm expected =
          s.vol().scaled(Polynomial(Rational(6)) * norm_squared(z, s.metric()));
      CHECK(square == expected);
      CHECK(!square.is_zero());
    }
  }

  TEST_CASE("zero Z fails the nowhere-zero certificate") {
    const G2Structure s = G2Structure::standard();
    const CompatReport r =
        check_vector_triple(s, VectorField::basis(1), VectorField::basis(1),
                            VectorField::zero(), quick_spec());
    const Clause* z = find_clause(r, "Z nowhere-zero");
    REQUIRE(z);
    CHECK(z->verdict == Verdict::Failed);
    // The degenerate hypotheses hold (0 = 0), so conclusions are asserted
    // and reduce to 0 = 0.
    const Clause* h1 = find_clause(r, "H1: ι_Z φ = Y♭ ∧ X♭");
    REQUIRE(h1);
    CHECK(h1->verdict == Verdict::Pass);
    for (const auto& c : r.clauses())
      if (c.name.rfind("conclusion", 0) == 0) CHECK(c.verdict == Verdict::Pass);
  }
}

TEST_SUITE("identity suite") {
  TEST_CASE("500 trials exact at the default seed") {
    const CompatReport r = identity_suite(G2Structure::standard(), 500);
    CHECK(r.passed());
    for (const auto& c : r.clauses()) CHECK(c.verdict == Verdict::Pass);
  }

  TEST_CASE("spot anchors for the contraction identities") {
    const G2Structure s = G2Structure::standard();
    // (iota_1 phi) ^ *phi = 3 * dx1 = 3 e234567.
    const KForm lhs =
        wedge(interior_product(VectorField::basis(1), s.phi()), s.star_phi());
    KForm expected(6);
    expected.add_term(MultiIndex::of({2, 3, 4, 5, 6, 7}), Polynomial(3));
    CHECK(lhs == expected);
    // iota_6 iota_7 *phi = e45 + e23 both ways.
    const KForm a = interior_product(
        VectorField::basis(7), interior_product(VectorField::basis(6),
                                                s.star_phi()));
    const KForm b = s.star(wedge(flat(VectorField::basis(7), s.metric()),
                                 wedge(flat(VectorField::basis(6), s.metric()),
                                       s.phi())));
    CHECK(a == -b);
  }

  TEST_CASE("the suite also holds on the reversed structure") {
    const G2Structure reversed(-standard_phi(), ConstantMetric::identity(), -1);
    CHECK(identity_suite(reversed, 60, 7).passed());
  }

  TEST_CASE("zero fields degenerate every identity to 0 = 0") {
    const G2Structure s = G2Structure::standard();
    const VectorField z = VectorField::zero();
    CHECK(interior_product(z, interior_product(z, s.star_phi())).is_zero());
    CHECK(s.star(wedge(flat(z, s.metric()),
                       wedge(flat(z, s.metric()), s.phi())))
              .is_zero());
    CHECK(wedge(interior_product(z, s.phi()), s.star_phi()).is_zero());
    CHECK(cross_product(z, cross_product(z, z, s), s).is_zero());
  }
}
