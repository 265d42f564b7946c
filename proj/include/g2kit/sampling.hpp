#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/hodge.hpp"
#include "g2kit/report.hpp"

namespace g2kit {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Deterministic generator (splitmix64). The standard-library distributions
// are implementation-defined, so all randomness used in certificates and
// property trials goes through this to keep reports byte-identical for a
// given seed on any platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Sampling configuration for nonvanishing certificates: a grid over a box
/// plus pseudo-random rational points, all runner-configurable.
struct SamplingSpec {
  int grid_resolution = 4;
  Rational box_lo = Rational(-1);
  Rational box_hi = Rational(1);
  int random_points = 64;
  std::uint64_t seed = kDefaultSeed;
  double numeric_tol = 1e-12;
};

/// Small random rational in [-max_num, max_num] x {1..max_den}.
inline Rational random_rational(SplitMix64& rng, long long max_num = 8,
                                long long max_den = 4) {
  const long long n =
      static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * max_num + 1))) -
      max_num;
  const long long d =
      1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_den)));
  return Rational(n, d);
}

inline Rational random_nonzero_rational(SplitMix64& rng, long long max_num = 8,
                                        long long max_den = 4) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

inline VectorField random_constant_field(SplitMix64& rng) {
  VectorField v;
  for (int i = 1; i <= kDim; ++i) v.component(i) = Polynomial(random_rational(rng));
  return v;
}

inline Point random_point(SplitMix64& rng, const Rational& lo, const Rational& hi) {
  Point pt;
  for (int i = 1; i <= kDim; ++i) {
    Rational u(static_cast<long long>(rng.below(257)), 256);
    pt.coord(i) = lo + (hi - lo) * u;
  }
  return pt;
}

/// Rational unit vector via stereographic parametrization:
/// ((1-s), 2t_1, ..., 2t_6)/(1+s) with s = Σ t_i^2 has exact norm 1.
inline std::array<Rational, kDim> random_rational_unit_vector(SplitMix64& rng) {
  std::array<Rational, kDim - 1> t;
  Rational s(0);
  for (auto& ti : t) {
    ti = random_rational(rng, 3, 3);
    s += ti * ti;
  }
  const Rational denom = Rational(1) + s;
  std::array<Rational, kDim> u;
  u[0] = (Rational(1) - s) / denom;
  for (int i = 1; i < kDim; ++i)
    u[static_cast<std::size_t>(i)] = Rational(2) * t[static_cast<std::size_t>(i - 1)] / denom;
  // Random coordinate rotation for coverage of all axes.
  const std::size_t shift = rng.below(kDim);
  std::array<Rational, kDim> out;
  for (std::size_t i = 0; i < kDim; ++i) out[(i + shift) % kDim] = u[i];
  return out;
}

/// Visits the lattice grid over the box, then the pseudo-random points.
template <class Fn>
void for_each_sample(const SamplingSpec& spec, Fn&& fn) {
  const int res = spec.grid_resolution;
  if (res > 0) {
    std::vector<Rational> levels;
    levels.reserve(static_cast<std::size_t>(res));
    if (res == 1) {
      levels.push_back((spec.box_lo + spec.box_hi) * Rational(1, 2));
    } else {
      for (int i = 0; i < res; ++i)
        levels.push_back(spec.box_lo + (spec.box_hi - spec.box_lo) *
                                           Rational(i, res - 1));
    }
    std::array<int, kDim> digit{};
    for (;;) {
      Point pt;
      for (int i = 0; i < kDim; ++i)
        pt.x[static_cast<std::size_t>(i)] =
            levels[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
      fn(pt);
      int pos = 0;
      while (pos < kDim) {
        if (++digit[static_cast<std::size_t>(pos)] < res) break;
        digit[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == kDim) break;
    }
  }
  SplitMix64 rng(spec.seed);
  for (int i = 0; i < spec.random_points; ++i)
    fn(random_point(rng, spec.box_lo, spec.box_hi));
}

/// Outcome of a nonvanishing certification.
struct Certificate {
  Verdict status = Verdict::Failed;
  std::optional<Point> witness;
  std::optional<Rational> min_abs;
  std::string note;
};

// Certifies that a polynomial vanishes nowhere: a nonzero constant is a
// proof; otherwise the sampling grid is scanned for exact zeros and sign
// changes, and a clean scan is reported as the weaker sampled status.
inline Certificate certify_nowhere_zero(const Polynomial& p,
                                        const SamplingSpec& spec) {
  Certificate cert;
  if (p.is_zero()) {
    cert.status = Verdict::Failed;
    cert.note = "identically zero";
    return cert;
  }
  if (p.is_constant()) {
    cert.status = Verdict::Proven;
    cert.note = "nonzero constant " + p.constant_value().to_string();
    return cert;
  }
  int sign_seen = 0;
  bool failed = false;
  for_each_sample(spec, [&](const Point& pt) {
    if (failed) return;
    const Rational v = p.eval(pt);
    if (v.is_zero()) {
      cert.witness = pt;
      cert.note = "exact zero at sample point";
      failed = true;
      return;
    }
    if (sign_seen == 0) {
      sign_seen = v.sign();
    } else if (v.sign() != sign_seen) {
      cert.witness = pt;
      cert.note = "sign change at sample point";
      failed = true;
      return;
    }
    const Rational a = v.abs();
    if (!cert.min_abs || a < *cert.min_abs) cert.min_abs = a;
  });
  if (failed) {
    cert.status = Verdict::Failed;
    return cert;
  }
  cert.status = Verdict::Sampled;
  cert.note = "no zero or sign change on samples; min |value| = " +
              (cert.min_abs ? cert.min_abs->to_string() : "?");
  return cert;
}

/// Nowhere-zero certificate for a vector field via the positive-definite
/// metric: v(p) = 0 iff g(v,v)(p) = 0.
inline Certificate certify_nowhere_zero(const VectorField& v,
                                        const ConstantMetric& g,
                                        const SamplingSpec& spec) {
  return certify_nowhere_zero(norm_squared(v, g), spec);
}

/// Renders a certificate into a report clause.
inline Clause certificate_clause(const std::string& name, const Certificate& c) {
  Clause cl;
  cl.name = name;
  cl.verdict = c.status;
  cl.detail = c.note;
  if (c.witness) cl.witness = c.witness->to_string();
  return cl;
}

}  // namespace g2kit
