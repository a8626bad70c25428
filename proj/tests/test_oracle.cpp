#include <doctest.h>

#include <cmath>
#include <map>

#include "penney/errors.hpp"
#include "penney/oracle.hpp"
#include "penney/solver.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace penney;
using namespace penney::testing;

namespace {
const Rational kHalf(1, 2);
}

TEST_CASE("match automaton") {
  const auto sys = three_coin_patterns();
  const MatchAutomaton a(sys);
  // trie: root, T, TH, THH, H, HT, HTH, HH, HHT
  CHECK(a.state_count() == 9);
  std::size_t s = MatchAutomaton::kRoot;
  for (std::size_t letter : {0u, 1u, 0u}) s = a.next(s, letter);  // H T H
  CHECK(a.accepting(s) == std::optional<std::size_t>(1));

  for (const auto& r : random_corpus(50, 80)) {
    const MatchAutomaton m(r);
    std::size_t total_len = 0;
    for (const auto& p : r.patterns()) total_len += p.length();
    CHECK(m.state_count() <= 1 + total_len);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::size_t st = MatchAutomaton::kRoot;
      const auto& code = r.encoded(i);
      for (std::size_t k = 0; k < code.size(); ++k) {
        st = m.next(st, code[k]);
        CHECK(m.accepting(st).has_value() == (k + 1 == code.size()));
      }
      CHECK(m.accepting(st) == std::optional<std::size_t>(i));
    }
  }
}

TEST_CASE("dp distribution against enumeration") {
  const auto hh = dp_distribution(coin_system(kHalf, {"HH"}), 4);
  CHECK(hh.tails[2] == Rational(3, 4));
  CHECK(hh.tails[0] == Rational(1));

  const auto three = dp_distribution(three_coin_patterns(), 3);
  CHECK(three.first_hits[3] == std::vector<Rational>{Rational(1, 8), Rational(1, 8), Rational(1, 8)});
  CHECK(three.tails[3] == Rational(5, 8));

  for (const auto& sys : random_corpus(30, 81, CorpusLimits{2, 3, 4, 5})) {
    const std::size_t n = sys.dist().alphabet().size() == 2 ? 10 : 7;
    const auto dp = dp_distribution(sys, n);
    const auto brute = brute_force_first_hits(sys, n);
    CHECK(dp.first_hits == brute.first_hits);
    CHECK(dp.tails == brute.tails);
    for (std::size_t k = 0; k < sys.min_length(); ++k) {
      CHECK(dp.tails[k] == Rational(1));
      for (const auto& x : dp.first_hits[k]) CHECK(x.is_zero());
    }
  }
  CHECK_THROWS_AS(dp_distribution(three_coin_patterns(), 0), std::invalid_argument);
}

TEST_CASE("dp output satisfies the first-occurrence recurrence") {
  // q_n Pr(A_i) = sum_j sum_k [prefix_k(A_i) = suffix_k(A_j)] Pr(last l_i - k of A_i) p_{n+k}^{A_j}
  const std::size_t n_max = 24;
  for (const auto& sys : random_corpus(40, 82)) {
    const auto dp = dp_distribution(sys, n_max);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const Pattern& a_i = sys.pattern(i);
      const Rational pr = pattern_prob(sys.dist(), a_i);
      for (std::size_t n = 0; n + a_i.length() <= n_max; ++n) {
        Rational rhs;
        for (std::size_t j = 0; j < sys.size(); ++j) {
          const Poly w = correlation_poly(sys.dist(), a_i, sys.pattern(j));
          for (std::size_t d = 0; d < a_i.length(); ++d)  // term s^d comes from k = l_i - d
            rhs += w.coeff(d) * dp.first_hits[n + a_i.length() - d][j];
        }
        CHECK(dp.tails[n] * pr == rhs);
      }
    }
  }
}

TEST_CASE("dp matches the generating function series") {
  for (const auto& sys : random_corpus(40, 83)) {
    const auto dp = dp_distribution(sys, 30);
    const auto b = generating_functions(sys);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const auto c = b.pattern_gfs[i].series(31);
      for (std::size_t n = 0; n <= 30; ++n) CHECK(c[n] == dp.first_hits[n][i]);
    }
    CHECK(b.tail_gf.series(31) == dp.tails);
  }
}

TEST_CASE("letter sampler boundaries") {
  const Distribution d(Alphabet({"a", "b", "c"}), std::vector<Rational>{kHalf, Rational(0), kHalf});
  const LetterSampler s(d);
  CHECK(s(0) == 0);
  CHECK(s((1ULL << 63) - 1) == 0);
  CHECK(s(1ULL << 63) == 2);
  CHECK(s(~0ULL) == 2);

  const LetterSampler fair(Distribution::coin(kHalf));
  std::map<std::size_t, int> counts;
  const LetterSampler& ref = fair;
  for (std::uint64_t t = 0; t < 2000; ++t) {
    LetterStream stream(ref, 99, t);
    ++counts[stream.next()];
  }
  CHECK(counts[0] > 900);
  CHECK(counts[1] > 900);
}

TEST_CASE("simulation replays the letter stream") {
  const auto sys = coin_system(kHalf, {"H"});
  const LetterSampler sampler(sys.dist());
  for (std::uint64_t seed : {1ULL, 42ULL, 12345ULL}) {
    LetterStream stream(sampler, seed, 0);
    std::uint64_t first_h = 1;
    while (stream.next() != 0) ++first_h;
    const SimResult r = simulate(sys, SimConfig{1, seed, 1000, 1});
    CHECK(r.wins[0] == 1);
    CHECK(r.wait_sum[0] == first_h);
  }
}

TEST_CASE("simulation is deterministic and independent of worker count") {
  const auto sys = three_coin_patterns();
  const SimConfig one{20000, 7, default_max_steps(sys), 1};
  SimConfig four = one;
  four.workers = 4;
  const SimResult a = simulate(sys, one);
  CHECK(a == simulate(sys, one));
  CHECK(a == simulate(sys, four));
  SimConfig other = one;
  other.seed = 8;
  CHECK_FALSE(a == simulate(sys, other));
}

TEST_CASE("simulation statistics") {
  const auto sys = three_coin_patterns();
  const auto exact = analyze(sys);
  const SimResult r = simulate(sys, SimConfig{200000, 3, default_max_steps(sys), 0});
  CHECK(r.truncated == 0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CHECK(std::abs(r.win_fraction(i) - exact.win_probs[i].to_double()) < 4 * r.win_fraction_se(i));
    CHECK(std::abs(r.conditional_mean(i) - exact.conditional_waits[i].to_double()) <
          4 * r.conditional_mean_se(i));
  }
  CHECK(std::abs(r.mean_wait() - exact.expected_wait.to_double()) < 4 * r.mean_wait_se());
}

TEST_CASE("simulation configuration errors and truncation") {
  const auto sys = coin_system(Rational(1, 100), {"HHHH"});
  CHECK_THROWS_AS(simulate(sys, SimConfig{0, 1, 100, 1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(sys, SimConfig{10, 1, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(sys, SimConfig{10, 1, 4, 1}), Error);

  const SimResult partial = simulate(coin_system(kHalf, {"HHH"}), SimConfig{1000, 1, 5, 1});
  CHECK(partial.truncated > 0);
  CHECK(partial.completed() + partial.truncated == 1000);

  CHECK(default_max_steps(three_coin_patterns()) == 517);  // ceil(100 * 31/6)
  CHECK(default_max_steps(coin_system(kHalf, {"HH"})) == 600);
}

TEST_CASE("conditional waits agree with a truncated first-passage sum") {
  // sum_n n Pr(tau = tau_i = n) / Pr(tau = tau_i) in long double, stepped over
  // the automaton until the surviving mass is negligible.
  auto numeric = [](const PatternSystem& sys) {
    const MatchAutomaton a(sys);
    std::vector<long double> probs;
    for (const auto& p : sys.dist().probs()) probs.push_back(static_cast<long double>(p.to_double()));
    std::vector<long double> live(a.state_count()), wins(sys.size()), moments(sys.size());
    live[MatchAutomaton::kRoot] = 1;
    long double alive = 1;
    for (std::size_t n = 1; alive > 1e-16L && n < 200000; ++n) {
      std::vector<long double> next(a.state_count());
      for (std::size_t s = 0; s < live.size(); ++s) {
        if (live[s] == 0) continue;
        for (std::size_t c = 0; c < probs.size(); ++c) {
          const long double mass = live[s] * probs[c];
          const std::size_t t = a.next(s, c);
          if (const auto hit = a.accepting(t)) {
            wins[*hit] += mass;
            moments[*hit] += mass * static_cast<long double>(n);
          } else {
            next[t] += mass;
          }
        }
      }
      live = std::move(next);
      alive = 0;
      for (auto x : live) alive += x;
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < sys.size(); ++i) out.push_back(static_cast<double>(moments[i] / wins[i]));
    return out;
  };

  std::vector<PatternSystem> systems = random_corpus(30, 84, CorpusLimits{2, 3, 3, 4});
  systems.push_back(three_coin_patterns(Rational(1, 3)));
  systems.push_back(three_coin_patterns(Rational(3, 4)));
  for (const auto& sys : systems) {
    const auto exact = conditional_waits(sys);
    const auto approx = numeric(sys);
    for (std::size_t i = 0; i < sys.size(); ++i)
      CHECK(std::abs(exact[i].to_double() - approx[i]) < 1e-7 * std::max(1.0, approx[i]));
  }
}
