#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

// Dense matrix of exact rationals; just enough linear algebra for the
// pointwise layer (determinants, inverses, ranks, nullspaces), all by
// fraction-based Gaussian elimination.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::size_t rank() const {
    RationalMatrix m = *this;
    return m.forward_eliminate();
  }

  Rational det() const {
    if (rows_ != cols_) throw Error("det: matrix not square");
    RationalMatrix m = *this;
    Rational d(1);
    for (std::size_t col = 0, row = 0; col < cols_ && row < rows_; ++col, ++row) {
      std::size_t pivot = row;
      while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return Rational(0);
      if (pivot != row) {
        m.swap_rows(pivot, row);
        d = -d;
      }
      d *= m.at(row, col);
      const Rational inv = m.at(row, col).inverse();
      for (std::size_t r = row + 1; r < rows_; ++r) {
        if (m.at(r, col).is_zero()) continue;
        const Rational f = m.at(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c)
          m.at(r, c) -= f * m.at(row, c);
      }
    }
    return d;
  }

  std::optional<RationalMatrix> inverse() const {
    if (rows_ != cols_) throw Error("inverse: matrix not square");
    RationalMatrix m = *this;
    RationalMatrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return std::nullopt;
      if (pivot != col) {
        m.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
      }
      const Rational s = m.at(col, col).inverse();
      for (std::size_t c = 0; c < cols_; ++c) {
        m.at(col, c) *= s;
        inv.at(col, c) *= s;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == col || m.at(r, col).is_zero()) continue;
        const Rational f = m.at(r, col);
        for (std::size_t c = 0; c < cols_; ++c) {
          m.at(r, c) -= f * m.at(col, c);
          inv.at(r, c) -= f * inv.at(col, c);
        }
      }
    }
    return inv;
  }

  /// Basis of the right nullspace, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const {
    RationalMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != row) m.swap_rows(pivot, row);
      const Rational s = m.at(row, col).inverse();
      for (std::size_t c = col; c < cols_; ++c) m.at(row, c) *= s;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || m.at(r, col).is_zero()) continue;
        const Rational f = m.at(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          m.at(r, c) -= f * m.at(row, c);
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<std::vector<Rational>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
        ++next_pivot;
        continue;
      }
      std::vector<Rational> v(cols_, Rational(0));
      v[col] = Rational(1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[pivot_col[r]] = -m.at(r, col);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;

  void swap_rows(std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }

  std::size_t forward_eliminate() {
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != row) swap_rows(pivot, row);
      const Rational inv = at(row, col).inverse();
      for (std::size_t r = row + 1; r < rows_; ++r) {
        if (at(r, col).is_zero()) continue;
        const Rational f = at(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
      }
      ++row;
    }
    return row;
  }
};

}  // namespace g2kit
