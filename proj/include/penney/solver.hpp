#pragma once

/**
 * @file solver.hpp
 * @brief Closed-form answers for a pattern race via correlation-matrix
 *        determinants.
 *
 * For patterns A_1..A_m let B(s) be the matrix with entries w_{A_i}^{A_j}(s)
 * and B^j(s) the same matrix with column j replaced by [Pr(A_i) s^{l_i}].
 * With D(s) = sum_j det B^j(s) + (1 - s) det B(s):
 *
 *   g_i(s) = sum_n Pr(tau = tau_i = n) s^n = det B^i(s) / D(s)
 *   Q(s)   = sum_n Pr(tau > n) s^n         = det B(s)   / D(s)
 *
 * Values at s = 1 are taken by evaluating the polynomials directly.
 */

#include <cstddef>
#include <vector>

#include "penney/matrix.hpp"
#include "penney/patterns.hpp"
#include "penney/ratfn.hpp"

namespace penney {

struct CorrelationMatrices {
  PolyMatrix b;
  std::vector<PolyMatrix> bj;  // bj[j]: column j replaced by [Pr(A_i) s^{l_i}]
};

struct GeneratingBundle {
  std::vector<RatFn> pattern_gfs;  // g_i(s), one per pattern
  RatFn tail_gf;                   // Q(s)
  Poly b_det;
  std::vector<Poly> bj_dets;

  /// sum_j det B^j(s) + (1 - s) det B(s), shared by every generating function.
  Poly denominator() const { return tail_gf.denom(); }
  /// sum_j det B^j(s)
  Poly bj_sum() const;
};

struct AnalysisReport {
  std::vector<Rational> win_probs;
  Rational expected_wait;
  std::vector<Rational> conditional_waits;
  GeneratingBundle bundle;
};

CorrelationMatrices build_matrices(const PatternSystem& sys);

/// Builds the bundle from already computed determinants.
GeneratingBundle make_bundle(Poly b_det, std::vector<Poly> bj_dets);

GeneratingBundle generating_functions(const PatternSystem& sys);

// The bundle overloads exist so the same formulas can be applied to a
// bundle that did not come from generating_functions().

/// Pr(tau = tau_i). Throws Error(DegenerateDenominator) if sum_j det B^j(1) == 0.
std::vector<Rational> win_probabilities(const GeneratingBundle& bundle);
std::vector<Rational> win_probabilities(const PatternSystem& sys);

/// E tau. Throws Error(DegenerateDenominator).
Rational expected_wait(const GeneratingBundle& bundle);
Rational expected_wait(const PatternSystem& sys);

/// E tau for a lone pattern: sum over self-overlap lengths k of 1 / Pr(first k letters).
Rational solovev_wait(const Distribution& dist, const Pattern& a);

/// E(tau | tau = tau_i) = E tau + (d/ds)[det B^i / sum_j det B^j](1) / Pr(tau = tau_i).
/// Throws ZeroWinProbabilityError or Error(DegenerateDenominator).
std::vector<Rational> conditional_waits(const GeneratingBundle& bundle);
std::vector<Rational> conditional_waits(const PatternSystem& sys);

AnalysisReport analyze(const PatternSystem& sys);

}  // namespace penney
