#pragma once

#include <array>
#include <optional>

#include "g2kit/linalg.hpp"
#include "g2kit/polynomial.hpp"

namespace g2kit {

// Constant-coefficient Riemannian metric on the chart. Exact mode keeps the
// Hodge star and the musical isomorphisms inside the rational field, which
// restricts metrics to constant entries; symmetry and positive definiteness
// are verified at construction (leading principal minors).
class ConstantMetric {
 public:
  using Entries = std::array<std::array<Rational, kDim>, kDim>;

  explicit ConstantMetric(const Entries& g) : g_(g) {
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        if (!(entry(i, j) == entry(j, i)))
          throw Error("metric is not symmetric");
    RationalMatrix m(kDim, kDim);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            entry(i, j);
    for (std::size_t k = 1; k <= kDim; ++k) {
      RationalMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = m.at(i, j);
      if (!(minor.det() > Rational(0)))
        throw Error("metric is not positive definite");
    }
    det_ = m.det();
    auto inv = m.inverse();
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        ginv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            inv->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    sqrt_det_ = det_.sqrt_exact();
    identity_ = true;
    for (int i = 0; i < kDim && identity_; ++i)
      for (int j = 0; j < kDim && identity_; ++j)
        identity_ = entry(i, j) == Rational(i == j ? 1 : 0);
  }

  static ConstantMetric identity() {
    Entries g{};
    for (int i = 0; i < kDim; ++i)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    return ConstantMetric(g);
  }

  static ConstantMetric diagonal(const std::array<Rational, kDim>& d) {
    Entries g{};
    for (int i = 0; i < kDim; ++i)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
          d[static_cast<std::size_t>(i)];
    return ConstantMetric(g);
  }

  /// Entry g_ij, 1-based axes.
  const Rational& operator()(int i, int j) const { return entry(i - 1, j - 1); }
  /// Inverse metric entry g^ij, 1-based axes.
  const Rational& inverse(int i, int j) const {
    return ginv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  const Rational& det() const { return det_; }
  const std::optional<Rational>& sqrt_det() const { return sqrt_det_; }
  bool is_identity() const { return identity_; }

  friend bool operator==(const ConstantMetric& a, const ConstantMetric& b) {
    return a.g_ == b.g_;
  }

 private:
  Entries g_{};
  Entries ginv_{};
  Rational det_;
  std::optional<Rational> sqrt_det_;
  bool identity_ = false;

  const Rational& entry(int i, int j) const {
    return g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

}  // namespace g2kit
