#include "doctest.h"

#include <random>

#include "hodge/multipoly.hpp"
#include "hodge/recursion.hpp"

using namespace hodge;

namespace {

MultiPoly t(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
MultiPoly one(std::size_t arity) { return MultiPoly::constant(arity, Rational(1)); }

MultiPoly random_poly(std::mt19937 &rng, std::size_t arity, int terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5);
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  MultiPoly p(arity);
  for (int k = 0; k < terms; ++k) {
    Exponents e(arity);
    for (auto &x : e)
      x = ex(rng);
    p.add_term(e, Rational(coeff(rng), den(rng)));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937 &rng, std::size_t arity) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  std::vector<Rational> pt;
  for (std::size_t k = 0; k < arity; ++k)
    pt.emplace_back(num(rng), den(rng));
  return pt;
}

} // namespace

TEST_CASE("ring operations") {
  const MultiPoly a = t(1, 0) - one(1), b = t(1, 0) + one(1);
  CHECK(a * b == t(1, 0) * t(1, 0) - one(1));
  CHECK(a + MultiPoly(1) == a);
  CHECK(scale(t(1, 0) * t(1, 0), Rational(3, 2)).coefficient({2}) == Rational(3, 2));
  CHECK((a - a).is_zero());
  CHECK((a * Rational(0)).is_zero());
  CHECK_THROWS_AS(t(1, 0) + t(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(t(1, 0) * t(2, 0), std::invalid_argument);
}

TEST_CASE("apply_D") {
  const MultiPoly x = t(1, 0);
  const MultiPoly xi0 = x - one(1);
  const MultiPoly xi1 = x * x * x - x * x;
  CHECK(apply_D(xi0, 0) == xi1);
  CHECK(apply_D(one(1) * Rational(5), 0).is_zero());
  CHECK(apply_D(xi1, 0) == x * x * x * x * x * Rational(3) - x * x * x * x * Rational(5) +
                               x * x * x * Rational(2));
  CHECK_THROWS_AS(apply_D(xi0, 1), std::out_of_range);
}

TEST_CASE("divided differences") {
  const MultiPoly t1 = t(2, 0), t2 = t(2, 1);
  CHECK(divided_difference(t1 * t1 - t2 * t2, 0, 1) == t1 + t2);
  CHECK(divided_difference(t1 - t2, 0, 1) == one(2));
  CHECK_THROWS_AS(divided_difference(t1 * t1 + t2, 0, 1), NonPolynomialError);
  CHECK_THROWS_AS(divided_difference(t1, 0, 0), std::invalid_argument);
}

TEST_CASE("divided difference of the (1,2) recursion numerator is exact") {
  HodgeCache cache;
  const MultiPoly &h11 = cache.get({1, 1});
  std::size_t first[] = {0}, second[] = {1};
  MultiPoly a = apply_D(remap(h11, 2, first), 0);
  MultiPoly b = apply_D(remap(h11, 2, second), 1);
  MultiPoly num = shift((t(2, 1) - one(2)) * a, 0, 2) - shift((t(2, 0) - one(2)) * b, 1, 2);
  MultiPoly q = divided_difference(num, 0, 1);
  CHECK(q * (t(2, 0) - t(2, 1)) == num);
}

TEST_CASE("evaluate") {
  const MultiPoly x = t(1, 0);
  const std::vector<Rational> two{Rational(2)}, unit{Rational(1)}, three_halves{Rational(3, 2)};
  CHECK(evaluate(x - one(1), two) == Rational(1));
  CHECK(evaluate(x * x * x - x * x, unit) == Rational(0));
  CHECK(evaluate(x * x * x - x * x, three_halves) == Rational(9, 8));
  CHECK(evaluate(x * x, std::vector<double>{1.5}) == doctest::Approx(2.25));
  CHECK_THROWS_AS(evaluate(x, std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(t(2, 0) + t(2, 1)));
  CHECK_FALSE(is_symmetric(t(2, 0) - t(2, 1)));
  HodgeCache cache;
  CHECK(is_symmetric(cache.get({0, 3})));
  CHECK(is_symmetric(cache.get({0, 4})));
}

TEST_CASE("canonical text form") {
  const MultiPoly x = t(1, 0);
  CHECK((x * x * x * x * x * Rational(3) - x * x * x * x * Rational(5) + x * x * x * Rational(2))
            .to_string() == "3*t^5 + -5*t^4 + 2*t^3");
  CHECK((x - one(1)).to_string() == "t + -1");
  CHECK((t(2, 0) * t(2, 1) * Rational(-1, 2) + t(2, 1)).to_string() == "-1/2*t1*t2 + t2");
  CHECK(MultiPoly(3).to_string() == "0");
}

TEST_CASE("property: D is a derivation, divided difference inverts (t_i - t_j), evaluation is a ring map") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t arity = 1 + trial % 3;
    MultiPoly p = random_poly(rng, arity, 5, 4), q = random_poly(rng, arity, 5, 4);
    for (std::size_t i = 0; i < arity; ++i)
      CHECK(apply_D(p * q, i) == apply_D(p, i) * q + p * apply_D(q, i));
    if (arity >= 2) {
      MultiPoly factor = t(arity, 0) - t(arity, arity - 1);
      CHECK(divided_difference(p * factor, 0, arity - 1) == p);
    }
    auto pt = random_point(rng, arity);
    CHECK(evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt));
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
  }
}

TEST_CASE("remap merges variables") {
  // u1 * u2^2 with u1 = u2 = t gives t^3.
  MultiPoly p = MultiPoly::monomial({1, 2}, Rational(4));
  std::size_t diag[] = {0, 0};
  CHECK(remap(p, 1, diag) == MultiPoly::monomial({3}, Rational(4)));
  std::size_t bad[] = {0, 2};
  CHECK_THROWS_AS(remap(p, 2, bad), std::out_of_range);
}
