#include <doctest.h>

#include "penney/li.hpp"
#include "penney/solver.hpp"
#include "support/fixtures.hpp"

using namespace penney;
using namespace penney::testing;

namespace {
const Rational kHalf(1, 2);
std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }
}  // namespace

TEST_CASE("star numbers") {
  const Distribution fair = Distribution::coin(kHalf);
  const Alphabet& ht = fair.alphabet();
  const Pattern thh = Pattern::parse(ht, "THH");
  const Pattern hth = Pattern::parse(ht, "HTH");
  CHECK(star_number(fair, thh, thh) == Rational(8));
  CHECK(star_number(fair, hth, hth) == Rational(10));

  const Distribution dna = uniform_dna();
  CHECK(star_number(dna, Pattern::parse(dna.alphabet(), "ACG"), Pattern::parse(dna.alphabet(), "ATG")) ==
        Rational(0));
}

TEST_CASE("star number is the scaled correlation at s = 1") {
  for (const auto& sys : random_corpus(50, 70)) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const Pattern& a_i = sys.pattern(i);
      CHECK(star_number(sys.dist(), a_i, a_i) == solovev_wait(sys.dist(), a_i));
      CHECK(star_number(sys.dist(), a_i, a_i) >= pattern_prob(sys.dist(), a_i).inverse());
      for (std::size_t j = 0; j < sys.size(); ++j) {
        const Pattern& a_j = sys.pattern(j);
        CHECK(star_number(sys.dist(), a_j, a_i) ==
              correlation_poly(sys.dist(), a_i, a_j).eval(Rational(1)) / pattern_prob(sys.dist(), a_i));
      }
    }
  }
}

TEST_CASE("star matrix relates to the correlation determinants") {
  for (const auto& sys : random_corpus(40, 71)) {
    const StarMatrix star = star_matrix(sys);
    const GeneratingBundle b = generating_functions(sys);
    Rational scale(1);
    for (const auto& p : sys.patterns()) scale *= pattern_prob(sys.dist(), p);
    CHECK(b.b_det.eval(Rational(1)) == scale * star.c_det);
    for (std::size_t j = 0; j < sys.size(); ++j) CHECK(b.bj_dets[j].eval(Rational(1)) == scale * star.cj_dets[j]);
  }
}

TEST_CASE("star analysis") {
  const StarAnalysis three = star_analysis(three_coin_patterns());
  CHECK(three.win_probs == R({Rational(5, 12), Rational(1, 3), Rational(1, 4)}));
  CHECK(three.expected_wait == Rational(31, 6));

  const StarAnalysis dna = star_analysis(dna_patterns());
  CHECK(dna.win_probs == R({Rational(1, 6), Rational(1, 6), Rational(2, 3)}));
  CHECK(dna.expected_wait == Rational(32, 3));

  const auto single = coin_system(Rational(1, 3), {"HTH"});
  const StarAnalysis one = star_analysis(single);
  CHECK(one.win_probs == R({Rational(1)}));
  CHECK(one.expected_wait == star_number(single.dist(), single.pattern(0), single.pattern(0)));

  for (const auto& sys : random_corpus(60, 72)) {
    const StarAnalysis s = star_analysis(sys);
    CHECK(s.win_probs == win_probabilities(sys));
    CHECK(s.expected_wait == expected_wait(sys));
  }
}

TEST_CASE("Li identity") {
  CHECK(verify_li_identity(three_coin_patterns()) == R({0, 0, 0}));
  CHECK(verify_li_identity(dna_patterns()) == R({0, 0, 0}));
  CHECK(verify_li_identity(coin_system(kHalf, {"HHT", "THT"})) == R({0, 0}));
  for (const auto& sys : random_corpus(60, 73))
    for (const auto& r : verify_li_identity(sys)) CHECK(r.is_zero());
}

TEST_CASE("identity correlation shortcut") {
  const auto dna = identity_b_shortcut(dna_patterns());
  REQUIRE(dna.has_value());
  CHECK(*dna == R({Rational(34, 3), Rational(34, 3), Rational(31, 3)}));
  CHECK((*dna)[0] == (*dna)[1]);

  CHECK_FALSE(identity_b_shortcut(three_coin_patterns()).has_value());
  CHECK_FALSE(identity_b_shortcut(coin_system(kHalf, {"HH"})).has_value());

  const auto ht = coin_system(kHalf, {"HT"});
  const auto single = identity_b_shortcut(ht);
  REQUIRE(single.has_value());
  CHECK(*single == R({expected_wait(ht)}));

  std::size_t applicable = 0;
  for (const auto& sys : random_corpus(150, 74)) {
    if (const auto s = identity_b_shortcut(sys)) {
      ++applicable;
      CHECK(*s == conditional_waits(sys));
    }
  }
  CHECK(applicable > 0);
}
