#include <doctest.h>

#include <vector>

#include "g2kit/g2.hpp"
#include "g2kit/hodge.hpp"
#include "test_support.hpp"

using namespace g2kit;

namespace {

Polynomial x(int axis) { return Polynomial::variable(axis); }

KForm one_form(std::initializer_list<std::pair<int, Polynomial>> terms) {
  KForm f(1);
  for (const auto& [axis, p] : terms) f.add_term(MultiIndex::of({axis}), p);
  return f;
}

// alpha0 = dx1 - x3 dx2 - x5 dx4 - x7 dx6
KForm alpha0() {
  return one_form({{1, Polynomial(1)}, {2, -x(3)}, {4, -x(5)}, {6, -x(7)}});
}

KForm constant_2form(std::initializer_list<std::pair<MultiIndex, long long>> t) {
  KForm f(2);
  for (const auto& [m, c] : t) f.add_term(m, Polynomial(c));
  return f;
}

const KForm& star_phi0_expected() {
  // Frozen by starring each basis term of phi0 with permutation-sign
  // bookkeeping by hand.
  static const KForm f = [] {
    KForm g(4);
    g.add_term(MultiIndex::of({4, 5, 6, 7}), Polynomial(1));
    g.add_term(MultiIndex::of({2, 3, 6, 7}), Polynomial(1));
    g.add_term(MultiIndex::of({2, 3, 4, 5}), Polynomial(1));
    g.add_term(MultiIndex::of({1, 3, 5, 7}), Polynomial(1));
    g.add_term(MultiIndex::of({1, 3, 4, 6}), Polynomial(-1));
    g.add_term(MultiIndex::of({1, 2, 5, 6}), Polynomial(-1));
    g.add_term(MultiIndex::of({1, 2, 4, 7}), Polynomial(-1));
    return g;
  }();
  return f;
}

}  // namespace

TEST_SUITE("multi-index") {
  TEST_CASE("validation") {
    CHECK(MultiIndex::make(std::vector<int>{1, 2, 3}));
    CHECK(!MultiIndex::make(std::vector<int>{2, 2, 3}));
    CHECK(!MultiIndex::make(std::vector<int>{3, 2}));
    CHECK(!MultiIndex::make(std::vector<int>{0, 1}));
    CHECK(!MultiIndex::make(std::vector<int>{7, 8}));
    CHECK(MultiIndex::of({1, 4, 7}).complement() == MultiIndex::of({2, 3, 5, 6}));
  }

  TEST_CASE("merge sign by inversion count") {
    auto m = merge_indices(MultiIndex::of({1}), MultiIndex::of({2}));
    CHECK(m->second == 1);
    m = merge_indices(MultiIndex::of({2}), MultiIndex::of({1}));
    CHECK(m->second == -1);
    // (4,5) merged with (2,3,6,7): four inversions.
    m = merge_indices(MultiIndex::of({4, 5}), MultiIndex::of({2, 3, 6, 7}));
    CHECK(m->second == 1);
    CHECK(m->first == MultiIndex::full().without_position(0));
    CHECK(!merge_indices(MultiIndex::of({1, 2}), MultiIndex::of({2, 3})));
  }
}

TEST_SUITE("wedge") {
  TEST_CASE("dx1 ^ dx2 = e12 and antisymmetry") {
    const KForm a = KForm::dx(1), b = KForm::dx(2);
    KForm e12(2);
    e12.add_term(MultiIndex::of({1, 2}), Polynomial(1));
    CHECK(wedge(a, b) == e12);
    CHECK(wedge(b, a) == -e12);
  }

  TEST_CASE("(d alpha0)^3 = 6 e234567") {
    const KForm dalpha = exterior_derivative(alpha0());
    const KForm cubed = wedge_power(dalpha, 3);
    KForm expected(6);
    expected.add_term(MultiIndex::of({2, 3, 4, 5, 6, 7}), Polynomial(6));
    CHECK(cubed == expected);
  }

  TEST_CASE("alpha0 ^ (d alpha0)^3 = 6 e1234567") {
    const KForm top = wedge(alpha0(), wedge_power(exterior_derivative(alpha0()), 3));
    KForm expected(7);
    expected.add_term(MultiIndex::full(), Polynomial(6));
    CHECK(top == expected);
  }

  TEST_CASE("graded anticommutativity on random polynomial forms") {
    SplitMix64 rng(211);
    for (int t = 0; t < 100; ++t) {
      const int da = static_cast<int>(rng.below(4));
      const int db = static_cast<int>(rng.below(4));
      const KForm a = testing::random_kform(rng, da);
      const KForm b = testing::random_kform(rng, db);
      const KForm ab = wedge(a, b);
      const KForm ba = wedge(b, a);
      if ((da * db) % 2 == 0)
        CHECK(ab == ba);
      else
        CHECK(ab == -ba);
    }
  }

  TEST_CASE("degree overflow is the zero form") {
    SplitMix64 rng(212);
    const KForm a = testing::random_kform(rng, 4);
    const KForm b = testing::random_kform(rng, 5);
    CHECK(wedge(a, b).is_zero());
  }
}

TEST_SUITE("exterior derivative") {
  TEST_CASE("d alpha0 = e23 + e45 + e67") {
    const KForm expected = constant_2form({{MultiIndex::of({2, 3}), 1},
                                           {MultiIndex::of({4, 5}), 1},
                                           {MultiIndex::of({6, 7}), 1}});
    CHECK(exterior_derivative(alpha0()) == expected);
  }

  TEST_CASE("d of constant forms vanishes") {
    CHECK(exterior_derivative(standard_phi()).is_zero());
  }

  TEST_CASE("d(x2 dx3) = e23") {
    KForm f(1);
    f.add_term(MultiIndex::of({3}), x(2));
    CHECK(exterior_derivative(f) == constant_2form({{MultiIndex::of({2, 3}), 1}}));
  }

  TEST_CASE("leibniz rule over the wedge") {
    SplitMix64 rng(214);
    for (int t = 0; t < 60; ++t) {
      const int da = static_cast<int>(rng.below(3));
      const int db = static_cast<int>(rng.below(3));
      const KForm a = testing::random_kform(rng, da);
      const KForm b = testing::random_kform(rng, db);
      const KForm lhs = exterior_derivative(wedge(a, b));
      KForm rhs = wedge(exterior_derivative(a), b);
      const KForm mixed = wedge(a, exterior_derivative(b));
      rhs = (da % 2 == 0) ? rhs + mixed : rhs - mixed;
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("d o d = 0 on random polynomial forms of each degree") {
    SplitMix64 rng(213);
    for (int degree = 0; degree <= 5; ++degree)
      for (int t = 0; t < 200; ++t) {
        const KForm a = testing::random_kform(rng, degree);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
      }
  }

  TEST_CASE("degree-7 input yields the zero form") {
    KForm top(7);
    top.add_term(MultiIndex::full(), x(1) * x(2));
    CHECK(exterior_derivative(top).is_zero());
  }
}

TEST_SUITE("interior product") {
  TEST_CASE("contractions of phi0") {
    const KForm phi = standard_phi();
    CHECK(interior_product(VectorField::basis(1), phi) ==
          constant_2form({{MultiIndex::of({2, 3}), 1},
                          {MultiIndex::of({4, 5}), 1},
                          {MultiIndex::of({6, 7}), 1}}));
    CHECK(interior_product(VectorField::basis(2), phi) ==
          constant_2form({{MultiIndex::of({1, 3}), -1},
                          {MultiIndex::of({4, 6}), 1},
                          {MultiIndex::of({5, 7}), -1}}));
  }

  TEST_CASE("the B-compatibility pair contracts to alpha0") {
    // X = d/dx7, Y = -x7 d/dx1 + x5 d/dx3 - x3 d/dx5 - d/dx6.
    const VectorField X = VectorField::basis(7);
    VectorField Y = VectorField::basis(1).scaled(-x(7)) +
                    VectorField::basis(3).scaled(x(5)) -
                    VectorField::basis(5).scaled(x(3)) -
                    VectorField::basis(6);
    const KForm result = interior_product(Y, interior_product(X, standard_phi()));
    CHECK(result == alpha0());
  }

  TEST_CASE("double contraction vanishes") {
    SplitMix64 rng(217);
    for (int t = 0; t < 50; ++t) {
      const VectorField v = testing::random_polynomial_field(rng);
      const KForm a = testing::random_kform(rng, 3);
      CHECK(interior_product(v, interior_product(v, a)).is_zero());
    }
  }

  TEST_CASE("antiderivation rule over the wedge") {
    SplitMix64 rng(219);
    for (int t = 0; t < 60; ++t) {
      const int da = 1 + static_cast<int>(rng.below(3));
      const int db = 1 + static_cast<int>(rng.below(3));
      const VectorField v = testing::random_polynomial_field(rng);
      const KForm a = testing::random_kform(rng, da);
      const KForm b = testing::random_kform(rng, db);
      const KForm lhs = interior_product(v, wedge(a, b));
      KForm rhs = wedge(interior_product(v, a), b);
      const KForm mixed = wedge(a, interior_product(v, b));
      rhs = (da % 2 == 0) ? rhs + mixed : rhs - mixed;
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("degree-0 input is rejected") {
    CHECK_THROWS_AS(
        interior_product(VectorField::basis(1), KForm::scalar(Polynomial(1))),
        Error);
  }
}

TEST_SUITE("evaluation") {
  TEST_CASE("phi0 on frame vectors") {
    const KForm phi = standard_phi();
    const std::vector<VectorField> v123 = {VectorField::basis(1),
                                           VectorField::basis(2),
                                           VectorField::basis(3)};
    CHECK(eval_form(phi, Point::origin(), v123) == Rational(1));
    const std::vector<VectorField> v213 = {VectorField::basis(2),
                                           VectorField::basis(1),
                                           VectorField::basis(3)};
    CHECK(eval_form(phi, Point::origin(), v213) == Rational(-1));
  }

  TEST_CASE("d alpha0 annihilates d/dx1") {
    SplitMix64 rng(223);
    const KForm dalpha = exterior_derivative(alpha0());
    for (int t = 0; t < 40; ++t) {
      const VectorField v = testing::random_polynomial_field(rng);
      const Point pt = testing::random_rational_point(rng);
      const std::vector<VectorField> args = {VectorField::basis(1), v};
      CHECK(eval_form(dalpha, pt, args) == Rational(0));
    }
  }

  TEST_CASE("agrees with iterated contraction") {
    SplitMix64 rng(227);
    for (int t = 0; t < 40; ++t) {
      const KForm a = testing::random_kform(rng, 3);
      const Point pt = testing::random_rational_point(rng);
      std::vector<VectorField> args = {testing::random_polynomial_field(rng),
                                       testing::random_polynomial_field(rng),
                                       testing::random_polynomial_field(rng)};
      const KForm contracted = interior_product(
          args[2], interior_product(args[1], interior_product(args[0], a)));
      CHECK(eval_form(a, pt, args) ==
            contracted.coefficient(MultiIndex::empty()).eval(pt));
    }
  }

  TEST_CASE("arity mismatch is rejected") {
    const std::vector<VectorField> one = {VectorField::basis(1)};
    CHECK_THROWS_AS(eval_form(standard_phi(), Point::origin(), one), Error);
  }
}

TEST_SUITE("musical isomorphisms") {
  TEST_CASE("flat and sharp with the identity metric") {
    const ConstantMetric id = ConstantMetric::identity();
    CHECK(flat(VectorField::basis(1), id) == KForm::dx(1));
    CHECK(sharp(KForm::dx(3), id) == VectorField::basis(3));
  }

  TEST_CASE("flat scales with the metric") {
    const ConstantMetric g = ConstantMetric::diagonal(
        {Rational(4), Rational(1), Rational(1), Rational(1), Rational(1),
         Rational(1), Rational(1)});
    CHECK(flat(VectorField::basis(1), g) == KForm::dx(1).scaled(Rational(4)));
  }

  TEST_CASE("mutually inverse with random metrics") {
    SplitMix64 rng(229);
    const ConstantMetric g = ConstantMetric::diagonal(
        {Rational(4), Rational(9, 4), Rational(1), Rational(25), Rational(1),
         Rational(16, 9), Rational(1)});
    for (int t = 0; t < 40; ++t) {
      const VectorField v = testing::random_polynomial_field(rng);
      CHECK(sharp(flat(v, g), g) == v);
      const KForm a = testing::random_kform(rng, 1);
      CHECK(flat(sharp(a, g), g) == a);
    }
    // flat(v)(w) = g(v, w)
    for (int t = 0; t < 20; ++t) {
      const VectorField v = testing::random_polynomial_field(rng);
      const VectorField w = testing::random_polynomial_field(rng);
      CHECK(pair_form_field(flat(v, g), w) == metric_pairing(v, w, g));
    }
  }
}

TEST_SUITE("hodge star") {
  TEST_CASE("frozen values with the identity metric") {
    const ConstantMetric id = ConstantMetric::identity();
    KForm e123(3);
    e123.add_term(MultiIndex::of({1, 2, 3}), Polynomial(1));
    KForm e4567(4);
    e4567.add_term(MultiIndex::of({4, 5, 6, 7}), Polynomial(1));
    CHECK(hodge_star(e123, id, 1) == e4567);

    CHECK(hodge_star(standard_phi(), id, 1) == star_phi0_expected());

    KForm top(7);
    top.add_term(MultiIndex::full(), Polynomial(1));
    CHECK(hodge_star(KForm::scalar(Polynomial(1)), id, 1) == top);
    CHECK(hodge_star(top, id, 1) == KForm::scalar(Polynomial(1)));
  }

  TEST_CASE("star twice is the identity in dimension 7") {
    SplitMix64 rng(233);
    const ConstantMetric id = ConstantMetric::identity();
    for (int degree = 0; degree <= 7; ++degree)
      for (int t = 0; t < 25; ++t) {
        const KForm a = testing::random_kform(rng, degree);
        CHECK(hodge_star(hodge_star(a, id, 1), id, 1) == a);
        CHECK(hodge_star(hodge_star(a, id, -1), id, -1) == a);
      }
  }

  TEST_CASE("star twice with a non-identity metric") {
    SplitMix64 rng(239);
    const ConstantMetric g = ConstantMetric::diagonal(
        {Rational(4), Rational(1), Rational(9), Rational(1), Rational(1),
         Rational(1), Rational(1)});
    for (int degree = 0; degree <= 7; ++degree) {
      const KForm a = testing::random_kform(rng, degree, 2);
      CHECK(hodge_star(hodge_star(a, g, 1), g, 1) == a);
    }
    // diag(4,1,9,1,...): *dx1 = <dx1,dx1> sqrt(det) e234567 = (1/4)*6 = 3/2.
    KForm expected(6);
    expected.add_term(MultiIndex::of({2, 3, 4, 5, 6, 7}),
                      Polynomial(Rational(3, 2)));
    CHECK(hodge_star(KForm::dx(1), g, 1) == expected);
  }

  TEST_CASE("a ^ *a = |a|^2 vol") {
    SplitMix64 rng(241);
    const ConstantMetric id = ConstantMetric::identity();
    for (int degree = 1; degree <= 3; ++degree)
      for (int t = 0; t < 25; ++t) {
        const KForm a = testing::random_kform(rng, degree, 3, true);
        const KForm lhs = wedge(a, hodge_star(a, id, 1));
        Rational norm_sq(0);
        for (const auto& [m, p] : a.terms()) {
          (void)m;
          norm_sq += p.constant_value() * p.constant_value();
        }
        CHECK(lhs == volume_form(id, 1).scaled(norm_sq));
      }
  }

  TEST_CASE("irrational volume scale is rejected in exact mode") {
    const ConstantMetric g = ConstantMetric::diagonal(
        {Rational(2), Rational(1), Rational(1), Rational(1), Rational(1),
         Rational(1), Rational(1)});
    CHECK_THROWS_WITH_AS(hodge_star(KForm::dx(1), g, 1),
                         doctest::Contains("pointwise numeric"), Error);
  }
}

TEST_SUITE("star-interior identities") {
  // The three dimension-independent identities every downstream derivation
  // leans on, exact on random instances.
  TEST_CASE("i_v * a = (-1)^k *(v_flat ^ a)") {
    SplitMix64 rng(251);
    const ConstantMetric id = ConstantMetric::identity();
    for (int t = 0; t < 120; ++t) {
      const int k = static_cast<int>(rng.below(7));
      const KForm a = testing::random_kform(rng, k);
      const VectorField v = random_constant_field(rng);
      const KForm lhs = interior_product(v, hodge_star(a, id, 1));
      KForm rhs = hodge_star(wedge(flat(v, id), a), id, 1);
      if (k % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("i_v a = (-1)^{nk+n} *(v_flat ^ *a) with n = 7") {
    SplitMix64 rng(257);
    const ConstantMetric id = ConstantMetric::identity();
    for (int t = 0; t < 120; ++t) {
      const int k = 1 + static_cast<int>(rng.below(7));
      const KForm a = testing::random_kform(rng, k);
      const VectorField v = random_constant_field(rng);
      const KForm lhs = interior_product(v, a);
      KForm rhs = hodge_star(wedge(flat(v, id), hodge_star(a, id, 1)), id, 1);
      if ((7 * k + 7) % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("(i_v l) ^ m = (-1)^{k+1} l ^ (i_v m) for deg l + deg m = 8") {
    SplitMix64 rng(263);
    for (int k = 1; k <= 7; ++k)
      for (int t = 0; t < 30; ++t) {
        const KForm lambda = testing::random_kform(rng, k);
        const KForm mu = testing::random_kform(rng, 8 - k);
        const VectorField v = random_constant_field(rng);
        const KForm lhs = wedge(interior_product(v, lambda), mu);
        KForm rhs = wedge(lambda, interior_product(v, mu));
        if (k % 2 == 0) rhs = -rhs;
        CHECK(lhs == rhs);
      }
  }
}
