#include "penney/li.hpp"

#include <algorithm>

#include "penney/errors.hpp"

namespace penney {

Rational star_number(const Distribution& dist, const Pattern& a_j, const Pattern& a_i) {
  const auto& si = a_i.symbols();
  const auto& sj = a_j.symbols();
  Rational total;
  Rational prefix_prob(1);
  for (std::size_t k = 1; k <= std::min(si.size(), sj.size()); ++k) {
    prefix_prob *= dist.prob(si[k - 1]);
    if (std::equal(si.begin(), si.begin() + static_cast<std::ptrdiff_t>(k),
                   sj.end() - static_cast<std::ptrdiff_t>(k)))
      total += prefix_prob.inverse();
  }
  return total;
}

StarMatrix star_matrix(const PatternSystem& sys) {
  const std::size_t m = sys.size();
  RationalMatrix c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c.at(i, j) = star_number(sys.dist(), sys.pattern(j), sys.pattern(i));

  const std::vector<Rational> ones(m, Rational(1));
  std::vector<Rational> cj;
  cj.reserve(m);
  for (std::size_t j = 0; j < m; ++j) cj.push_back(det(c.with_column_replaced(j, ones)));
  Rational c_det = det(c);
  return StarMatrix{std::move(c), std::move(c_det), std::move(cj)};
}

StarAnalysis star_analysis(const PatternSystem& sys) {
  const StarMatrix star = star_matrix(sys);
  Rational total;
  for (const auto& d : star.cj_dets) total += d;
  if (total.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "sum of det C^j is zero");

  StarAnalysis out;
  for (const auto& d : star.cj_dets) out.win_probs.push_back(d / total);
  out.expected_wait = star.c_det / total;
  return out;
}

std::vector<Rational> verify_li_identity(const PatternSystem& sys) {
  const StarMatrix star = star_matrix(sys);
  const std::size_t m = sys.size();
  std::vector<Rational> residuals;
  residuals.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational r = star.c_det;
    for (std::size_t j = 0; j < m; ++j) r -= star.entries.at(i, j) * star.cj_dets[j];
    residuals.push_back(r);
  }
  return residuals;
}

bool correlation_matrix_is_identity(const PatternSystem& sys) {
  const Poly one = Poly::constant(Rational(1));
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) {
      const Poly w = correlation_poly(sys.dist(), sys.pattern(i), sys.pattern(j));
      if (i == j ? w != one : !w.is_zero()) return false;
    }
  return true;
}

std::optional<std::vector<Rational>> identity_b_shortcut(const PatternSystem& sys) {
  if (!correlation_matrix_is_identity(sys)) return std::nullopt;

  Rational prob_sum;
  Rational weighted_len_sum;
  for (const auto& p : sys.patterns()) {
    const Rational pr = pattern_prob(sys.dist(), p);
    prob_sum += pr;
    weighted_len_sum += pr * Rational(static_cast<long>(p.length()));
  }
  // With B = I, det B(1) = 1 and det B^j(1) = Pr(A_j).
  const Rational e_tau = prob_sum.inverse();
  const Rational mean_len = weighted_len_sum / prob_sum;

  std::vector<Rational> out;
  out.reserve(sys.size());
  for (const auto& p : sys.patterns()) out.push_back(e_tau + Rational(static_cast<long>(p.length())) - mean_len);
  return out;
}

}  // namespace penney
