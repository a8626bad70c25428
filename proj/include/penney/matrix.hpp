#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "penney/poly.hpp"
#include "penney/rational.hpp"

namespace penney {

/// Row-major m x m matrix, m >= 1.
template <typename T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t m) : m_(m), entries_(m * m) {
    if (m == 0) throw std::invalid_argument("SquareMatrix: size must be at least 1");
  }

  static SquareMatrix identity(std::size_t m) {
    SquareMatrix r(m);
    for (std::size_t i = 0; i < m; ++i) r.at(i, i) = T(Rational(1));
    return r;
  }

  std::size_t size() const { return m_; }
  T& at(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }

  SquareMatrix with_column_replaced(std::size_t j, std::span<const T> column) const {
    if (column.size() != m_) throw std::invalid_argument("SquareMatrix: column length mismatch");
    SquareMatrix r = *this;
    for (std::size_t i = 0; i < m_; ++i) r.at(i, j) = column[i];
    return r;
  }

  void swap_columns(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m_; ++i) std::swap(at(i, a), at(i, b));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m_; ++j) std::swap(at(a, j), at(b, j));
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t m_;
  std::vector<T> entries_;
};

using PolyMatrix = SquareMatrix<Poly>;
using RationalMatrix = SquareMatrix<Rational>;

/// Largest size handled by cofactor expansion in det(); larger matrices use
/// fraction-free elimination.
inline constexpr std::size_t kCofactorLimit = 6;

Poly det(const PolyMatrix& m);

/// Laplace expansion along the first row (division-free).
Poly det_cofactor(const PolyMatrix& m);

/// Bareiss fraction-free elimination over Q[s]; every division is exact.
Poly det_bareiss(const PolyMatrix& m);

/// Gaussian elimination over Q.
Rational det(const RationalMatrix& m);

}  // namespace penney
