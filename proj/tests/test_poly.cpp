#include <doctest.h>

#include <random>

#include "penney/poly.hpp"
#include "penney/ratfn.hpp"
#include "penney/errors.hpp"

using namespace penney;

namespace {

const Rational kHalf(1, 2);

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly canonical form") {
  CHECK(Poly{Rational(1), Rational(0), Rational(0)}.degree() == 0);
  CHECK(Poly{Rational(0)}.is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly::monomial(Rational(0), 4).is_zero());
  CHECK(Poly::monomial(Rational(3), 4).degree() == 4);
}

TEST_CASE("poly arithmetic") {
  const Poly one_plus_s{Rational(1), Rational(1)};
  CHECK(one_plus_s + Poly::one_minus_s() == Poly::constant(Rational(2)));

  const Poly ps = Poly::monomial(kHalf, 1);
  CHECK(ps * ps == Poly::monomial(Rational(1, 4), 2));

  const Poly w = Poly{Rational(1), Rational(0), kHalf * kHalf};  // pq s^2 + 1
  CHECK(w * Poly::constant(Rational(1)) == w);
  CHECK((w - w).is_zero());
  CHECK(w * Poly() == Poly());
}

TEST_CASE("poly evaluation") {
  // -p^3 q^2 s^5 - 2 p^2 q s^3 + p q s^2 + 1 at p = q = 1/2
  const Poly det_b{Rational(1), Rational(0), Rational(1, 4), Rational(-1, 4), Rational(0), Rational(-1, 32)};
  CHECK(det_b.eval(Rational(1)) == Rational(31, 32));
  CHECK(Poly().eval(Rational(17, 3)) == Rational(0));
  CHECK(Poly{Rational(1), Rational(0), Rational(1, 4)}.eval(Rational(0)) == Rational(1));
}

TEST_CASE("poly derivative") {
  CHECK(Poly{Rational(1), Rational(0), Rational(1, 4)}.derivative() == Poly::monomial(Rational(1, 2), 1));
  CHECK(Poly::constant(Rational(7)).derivative().is_zero());
  CHECK(Poly::monomial(kHalf, 1).derivative() == Poly::constant(kHalf));
}

TEST_CASE("poly to_string") {
  const Poly p{Rational(1), Rational(0), Rational(1, 4), Rational(-1, 4), Rational(0), Rational(-1, 32)};
  CHECK(p.to_string() == "-1/32*s^5 - 1/4*s^3 + 1/4*s^2 + 1");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly::one_minus_s().to_string() == "-s + 1");
}

TEST_CASE("poly properties on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const Poly a = random_poly(rng, 6);
    const Poly b = random_poly(rng, 6);
    const Rational x(num(rng), 7);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) {
      const auto [q, r] = a.divmod(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      CHECK((a * b).divide_exact(b) == a);
    }
  }
  CHECK_THROWS_AS(Poly::constant(Rational(1)).divmod(Poly()), std::domain_error);
  const Poly one_plus_s{Rational(1), Rational(1)};
  CHECK_THROWS_AS(one_plus_s.divide_exact(Poly::monomial(Rational(1), 1)), std::logic_error);
}

TEST_CASE("series expansion") {
  // ps / (1 - qs) at p = q = 1/2: the single pattern "H"
  const RatFn g(Poly::monomial(kHalf, 1), Poly{Rational(1), -kHalf});
  CHECK(g.series(4) == std::vector<Rational>{Rational(0), kHalf, Rational(1, 4), Rational(1, 8)});

  const RatFn one(Poly::constant(Rational(1)), Poly::constant(Rational(1)));
  CHECK(one.series(3) == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

  const RatFn bad(Poly::constant(Rational(1)), Poly::monomial(Rational(1), 1));
  CHECK_THROWS_AS(bad.series(2), Error);
  CHECK_THROWS_AS(RatFn(Poly(), Poly()), std::domain_error);
}

TEST_CASE("series reconstructs the numerator") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Poly numer = random_poly(rng, 5);
    Poly denom = random_poly(rng, 5);
    denom += Poly::constant(Rational(1) - denom.coeff(0));  // denom(0) = 1
    const RatFn f(numer, denom);
    const std::size_t n = 12;
    const Poly truncated(f.series(n));
    const Poly product = denom * truncated;
    for (std::size_t k = 0; k < n; ++k) CHECK(product.coeff(k) == numer.coeff(k));
  }
}
