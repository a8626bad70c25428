#include "penney/ratfn.hpp"

#include <algorithm>
#include <stdexcept>

#include "penney/errors.hpp"

namespace penney {

RatFn::RatFn(Poly numer, Poly denom) : numer_(std::move(numer)), denom_(std::move(denom)) {
  if (denom_.is_zero()) throw std::domain_error("RatFn: zero denominator polynomial");
}

Rational RatFn::eval(const Rational& x) const {
  const Rational d = denom_.eval(x);
  if (d.is_zero())
    throw Error(ErrorKind::DegenerateDenominator, "denominator vanishes at s = " + x.to_string());
  return numer_.eval(x) / d;
}

std::vector<Rational> RatFn::series(std::size_t n_terms) const {
  const Rational d0 = denom_.coeff(0);
  if (d0.is_zero())
    throw Error(ErrorKind::ZeroConstantDenominator,
                "denominator has zero constant term; no power series about s = 0");
  const Rational d0_inv = d0.inverse();
  const auto& d = denom_.coeffs();

  // denom * c = numer  =>  c_k = (numer_k - sum_{j>=1} d_j c_{k-j}) / d_0
  std::vector<Rational> c(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    Rational acc = numer_.coeff(k);
    const std::size_t jmax = std::min(k, d.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= d[j] * c[k - j];
    c[k] = acc * d0_inv;
  }
  return c;
}

}  // namespace penney
