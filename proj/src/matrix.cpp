#include "penney/matrix.hpp"

#include <numeric>

namespace penney {

namespace {

// Determinant of the submatrix on rows [row, m) and the given columns.
Poly cofactor_expand(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  Poly acc;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m.at(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly term = entry * cofactor_expand(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

Poly det(const PolyMatrix& m) {
  return m.size() <= kCofactorLimit ? det_cofactor(m) : det_bareiss(m);
}

Poly det_cofactor(const PolyMatrix& m) {
  std::vector<std::size_t> cols(m.size());
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_expand(m, 0, cols);
}

Poly det_bareiss(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t n = a.size();
  Poly prev_pivot = Poly::constant(Rational(1));
  bool negate = false;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a.at(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return {};
      a.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num.divide_exact(prev_pivot);
      }
      a.at(i, k) = Poly();
    }
    prev_pivot = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

Rational det(const RationalMatrix& input) {
  RationalMatrix a = input;
  const std::size_t n = a.size();
  Rational result(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != k) {
      a.swap_rows(k, pivot);
      result = -result;
    }
    const Rational& p = a.at(k, k);
    result *= p;
    const Rational p_inv = p.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      const Rational f = a.at(i, k) * p_inv;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return result;
}

}  // namespace penney
