#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

/// Dense univariate polynomial in s with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of s^k. The highest stored coefficient is
/// never zero; the zero polynomial is the empty list.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  explicit Poly(const Rational& c) : Poly(std::vector<Rational>{c}) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  /// 1 - s
  static Poly one_minus_s();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of s^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient and remainder with deg(remainder) < deg(divisor).
  /// Throws std::domain_error for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// Quotient of a division known to be exact; throws std::logic_error if
  /// the remainder is nonzero.
  Poly divide_exact(const Poly& divisor) const;

  /// Human-readable, highest degree first, e.g. "-1/32*s^5 + 1/4*s^2 + 1".
  std::string to_string(const std::string& var = "s") const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace penney
