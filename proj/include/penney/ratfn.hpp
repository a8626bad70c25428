#pragma once

#include <cstddef>
#include <vector>

#include "penney/poly.hpp"

namespace penney {

/// numer(s) / denom(s), kept exactly as constructed (no GCD cancellation).
class RatFn {
 public:
  /// Throws std::domain_error if `denom` is the zero polynomial.
  RatFn(Poly numer, Poly denom);

  const Poly& numer() const { return numer_; }
  const Poly& denom() const { return denom_; }

  /// Throws penney::Error(DegenerateDenominator) if denom(x) == 0.
  Rational eval(const Rational& x) const;

  /// First `n_terms` power-series coefficients about s = 0, by exact long
  /// division. Throws penney::Error(ZeroConstantDenominator) if denom(0) == 0.
  std::vector<Rational> series(std::size_t n_terms) const;

 private:
  Poly numer_;
  Poly denom_;
};

}  // namespace penney
