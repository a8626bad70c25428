#include "penney/cli/verify.hpp"

#include <exception>
#include <functional>

#include "penney/li.hpp"
#include "penney/oracle.hpp"

namespace penney::cli {

namespace {

CheckResult guarded(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string problem = body();
    return {name, problem.empty(), problem.empty() ? "ok" : problem};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

std::string system_residual(const PatternSystem& sys, const GeneratingBundle& b) {
  const Poly lhs = Poly::one_minus_s() * b.b_det + b.bj_sum() - b.denominator();
  if (!lhs.is_zero()) return "(1-s) det B + sum det B^j - D = " + lhs.to_string();

  const CorrelationMatrices mats = build_matrices(sys);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Poly r = Poly::monomial(pattern_prob(sys.dist(), sys.pattern(i)), sys.pattern(i).length()) * b.b_det;
    for (std::size_t j = 0; j < sys.size(); ++j) r -= mats.b.at(i, j) * b.bj_dets[j];
    if (!r.is_zero()) return "row " + std::to_string(i + 1) + " residual " + r.to_string();
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_checks(const PatternSystem& sys, const GeneratingBundle& bundle,
                                    std::size_t n_terms) {
  std::vector<CheckResult> out;
  out.push_back(guarded("system-residual", [&] { return system_residual(sys, bundle); }));

  out.push_back(guarded("win-probabilities-sum", [&] {
    Rational total;
    for (const auto& w : win_probabilities(bundle)) total += w;
    return total == Rational(1) ? std::string{} : "sum is " + total.to_string();
  }));

  out.push_back(guarded("total-expectation", [&] {
    const auto wins = win_probabilities(bundle);
    const auto cond = conditional_waits(bundle);
    Rational total;
    for (std::size_t i = 0; i < wins.size(); ++i) total += wins[i] * cond[i];
    const Rational e = expected_wait(bundle);
    return total == e ? std::string{} : "sum Pr*E(.|i) = " + total.to_string() + " but E tau = " + e.to_string();
  }));

  out.push_back(guarded("li-identity", [&] {
    const auto residuals = verify_li_identity(sys);
    for (std::size_t i = 0; i < residuals.size(); ++i)
      if (!residuals[i].is_zero())
        return "residual " + std::to_string(i + 1) + " = " + residuals[i].to_string();
    return std::string{};
  }));

  out.push_back(guarded("star-route-agreement", [&] {
    const StarAnalysis star = star_analysis(sys);
    if (star.win_probs != win_probabilities(bundle)) return std::string("win probabilities differ");
    if (star.expected_wait != expected_wait(bundle))
      return "E tau " + star.expected_wait.to_string() + " vs " + expected_wait(bundle).to_string();
    return std::string{};
  }));

  if (correlation_matrix_is_identity(sys)) {
    out.push_back(guarded("identity-shortcut", [&] {
      return *identity_b_shortcut(sys) == conditional_waits(bundle) ? std::string{}
                                                                    : "shortcut conditional waits differ";
    }));
  }

  if (sys.size() == 1) {
    out.push_back(guarded("solovev", [&] {
      const Rational s = solovev_wait(sys.dist(), sys.pattern(0));
      const Rational e = expected_wait(bundle);
      return s == e ? std::string{} : s.to_string() + " vs " + e.to_string();
    }));
  }

  out.push_back(guarded("dp-vs-series", [&] {
    const DpTable dp = dp_distribution(sys, n_terms);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const auto coeffs = bundle.pattern_gfs[i].series(n_terms + 1);
      for (std::size_t n = 0; n <= n_terms; ++n)
        if (coeffs[n] != dp.first_hits[n][i])
          return "p_" + std::to_string(n) + " of pattern " + std::to_string(i + 1) + ": series " +
                 coeffs[n].to_string() + ", dp " + dp.first_hits[n][i].to_string();
    }
    const auto tails = bundle.tail_gf.series(n_terms + 1);
    for (std::size_t n = 0; n <= n_terms; ++n)
      if (tails[n] != dp.tails[n])
        return "q_" + std::to_string(n) + ": series " + tails[n].to_string() + ", dp " + dp.tails[n].to_string();
    return std::string{};
  }));
  return out;
}

std::optional<CheckResult> first_failure(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return c;
  return std::nullopt;
}

}  // namespace penney::cli
