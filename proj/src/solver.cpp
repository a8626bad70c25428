#include "penney/solver.hpp"

#include <algorithm>

#include "penney/errors.hpp"

namespace penney {

namespace {

const Rational kOne(1);

Rational checked_bj_sum_at_one(const GeneratingBundle& bundle) {
  const Rational total = bundle.bj_sum().eval(kOne);
  if (total.is_zero())
    throw Error(ErrorKind::DegenerateDenominator, "sum of det B^j(1) is zero");
  return total;
}

}  // namespace

Poly GeneratingBundle::bj_sum() const {
  Poly total;
  for (const auto& p : bj_dets) total += p;
  return total;
}

CorrelationMatrices build_matrices(const PatternSystem& sys) {
  const std::size_t m = sys.size();
  PolyMatrix b(m);
  std::vector<Poly> column(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Pattern& a_i = sys.pattern(i);
    for (std::size_t j = 0; j < m; ++j) b.at(i, j) = correlation_poly(sys.dist(), a_i, sys.pattern(j));
    column[i] = Poly::monomial(pattern_prob(sys.dist(), a_i), a_i.length());
  }
  std::vector<PolyMatrix> bj;
  bj.reserve(m);
  for (std::size_t j = 0; j < m; ++j) bj.push_back(b.with_column_replaced(j, column));
  return {std::move(b), std::move(bj)};
}

GeneratingBundle make_bundle(Poly b_det, std::vector<Poly> bj_dets) {
  Poly denom = Poly::one_minus_s() * b_det;
  for (const auto& p : bj_dets) denom += p;

  std::vector<RatFn> gfs;
  gfs.reserve(bj_dets.size());
  for (const auto& p : bj_dets) gfs.emplace_back(p, denom);
  RatFn tail(b_det, denom);
  return GeneratingBundle{std::move(gfs), std::move(tail), std::move(b_det), std::move(bj_dets)};
}

GeneratingBundle generating_functions(const PatternSystem& sys) {
  const CorrelationMatrices mats = build_matrices(sys);
  std::vector<Poly> bj_dets;
  bj_dets.reserve(mats.bj.size());
  for (const auto& m : mats.bj) bj_dets.push_back(det(m));
  return make_bundle(det(mats.b), std::move(bj_dets));
}

std::vector<Rational> win_probabilities(const GeneratingBundle& bundle) {
  const Rational total = checked_bj_sum_at_one(bundle);
  std::vector<Rational> out;
  out.reserve(bundle.bj_dets.size());
  for (const auto& p : bundle.bj_dets) out.push_back(p.eval(kOne) / total);
  return out;
}

std::vector<Rational> win_probabilities(const PatternSystem& sys) {
  return win_probabilities(generating_functions(sys));
}

Rational expected_wait(const GeneratingBundle& bundle) {
  return bundle.b_det.eval(kOne) / checked_bj_sum_at_one(bundle);
}

Rational expected_wait(const PatternSystem& sys) { return expected_wait(generating_functions(sys)); }

Rational solovev_wait(const Distribution& dist, const Pattern& a) {
  const auto& s = a.symbols();
  const std::size_t l = s.size();
  Rational total;
  Rational prefix_prob(1);
  for (std::size_t k = 1; k <= l; ++k) {
    prefix_prob *= dist.prob(s[k - 1]);
    if (std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k),
                   s.end() - static_cast<std::ptrdiff_t>(k)))
      total += prefix_prob.inverse();
  }
  return total;
}

std::vector<Rational> conditional_waits(const GeneratingBundle& bundle) {
  const Poly d = bundle.bj_sum();
  const Poly d_prime = d.derivative();
  const Rational d1 = checked_bj_sum_at_one(bundle);
  const Rational d1_prime = d_prime.eval(kOne);
  const Rational e_tau = expected_wait(bundle);

  std::vector<Rational> out;
  out.reserve(bundle.bj_dets.size());
  for (std::size_t i = 0; i < bundle.bj_dets.size(); ++i) {
    const Poly& n = bundle.bj_dets[i];
    const Rational n1 = n.eval(kOne);
    const Rational win = n1 / d1;
    if (win.is_zero())
      throw ZeroWinProbabilityError(i, "pattern " + std::to_string(i + 1) + " can never win");
    // (N'D - ND') / D^2 at s = 1
    const Rational ratio_prime = (n.derivative().eval(kOne) * d1 - n1 * d1_prime) / (d1 * d1);
    out.push_back(e_tau + ratio_prime / win);
  }
  return out;
}

std::vector<Rational> conditional_waits(const PatternSystem& sys) {
  return conditional_waits(generating_functions(sys));
}

AnalysisReport analyze(const PatternSystem& sys) {
  GeneratingBundle bundle = generating_functions(sys);
  auto wins = win_probabilities(bundle);
  auto e = expected_wait(bundle);
  auto cond = conditional_waits(bundle);
  return AnalysisReport{std::move(wins), std::move(e), std::move(cond), std::move(bundle)};
}

}  // namespace penney
