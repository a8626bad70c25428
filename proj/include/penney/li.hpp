#pragma once

// Conway/Li style "star number" formulation of the race.
//
// A_j * A_i = sum over k of [first k letters of A_i == last k letters of A_j]
//             / Pr(first k letters of A_i)
//
// C has entry (i, j) = A_j * A_i and C^j replaces column j by ones. These
// determinants differ from det B(1), det B^j(1) only by the factor
// prod_i Pr(A_i), so they give the same win probabilities and E tau through
// an independent computation over Q.

#include <optional>
#include <vector>

#include "penney/matrix.hpp"
#include "penney/patterns.hpp"

namespace penney {

struct StarMatrix {
  RationalMatrix entries;      // (i, j) = A_j * A_i
  Rational c_det;              // det C
  std::vector<Rational> cj_dets;  // det C^j
};

struct StarAnalysis {
  std::vector<Rational> win_probs;
  Rational expected_wait;
};

Rational star_number(const Distribution& dist, const Pattern& a_j, const Pattern& a_i);

StarMatrix star_matrix(const PatternSystem& sys);

/// Throws Error(DegenerateDenominator) if sum_j det C^j == 0.
StarAnalysis star_analysis(const PatternSystem& sys);

/// det C - sum_j (A_j * A_i) det C^j for each i; every entry is zero when
/// the identity holds.
std::vector<Rational> verify_li_identity(const PatternSystem& sys);

/// True when every cross-correlation is zero and every self-correlation is
/// the constant 1.
bool correlation_matrix_is_identity(const PatternSystem& sys);

/// Conditional waits E tau + l_i - sum_k l_k Pr(A_k) / sum_k Pr(A_k),
/// valid only when the correlation matrix is the identity; nullopt otherwise.
std::optional<std::vector<Rational>> identity_b_shortcut(const PatternSystem& sys);

}  // namespace penney
