#include "doctest.h"

#include <random>

#include "hodge/combinatorics.hpp"
#include "hodge/xi_basis.hpp"

using namespace hodge;

TEST_CASE("first xi polynomials") {
  CHECK(xi(0).to_string() == "t + -1");
  CHECK(xi(1).to_string() == "t^3 + -t^2");
  CHECK(xi(2).to_string() == "3*t^5 + -5*t^4 + 2*t^3");
  CHECK_THROWS_AS(xi(-1), std::domain_error);
}

TEST_CASE("xi structure for n <= 10") {
  const auto a = a_sequence(10);
  for (int n = 1; n <= 10; ++n) {
    const MultiPoly p = xi(n);
    const unsigned un = static_cast<unsigned>(n);
    CHECK(p.degree() == 2 * n + 1);
    CHECK(p.coefficient({2 * un + 1}) == Rational(double_factorial(2 * n - 1)));
    CHECK(p.coefficient({2 * un}) == -Rational(double_factorial(2 * n + 1)) / Rational(3));
    BigInt lowest = factorial(n);
    if (n % 2)
      lowest = -lowest;
    CHECK(p.coefficient({un + 1}) == Rational(lowest));
    CHECK(p.coefficient({0}).is_zero());
    for (unsigned k = 0; k <= un; ++k)
      CHECK(p.coefficient({k}).is_zero());
    if (n >= 3)
      CHECK(p.coefficient({un + 2}) == Rational(a[n - 1]));
  }
}

TEST_CASE("a sequence") {
  const auto a = a_sequence(3);
  CHECK(a[0] == 1);
  CHECK(a[1] == -5);
  CHECK(a[2] == 26);
  CHECK(xi(3).coefficient({5}) == Rational(26));
  CHECK_THROWS_AS(a_sequence(0), std::domain_error);
}

TEST_CASE("to_xi_basis") {
  MultiPoly p = xi_product({0, 0});
  CHECK(to_xi_basis(p).coefficients == std::map<std::vector<unsigned>, Rational>{{{0, 0}, Rational(1)}});

  XiExpansion two = to_xi_basis(xi(1) + xi(0) * Rational(2));
  CHECK(two.at({1}) == Rational(1));
  CHECK(two.at({0}) == Rational(2));

  XiExpansion h11 = to_xi_basis((xi(1) - xi(0)) * Rational(1, 24));
  CHECK(h11.at({1}) == Rational(1, 24));
  CHECK(h11.at({0}) == Rational(-1, 24));

  CHECK_THROWS_AS(to_xi_basis(MultiPoly::monomial({2}, Rational(1))), NonPolynomialError);
  CHECK_THROWS_AS(to_xi_basis(MultiPoly::constant(1, Rational(1))), NonPolynomialError);
}

TEST_CASE("from_xi_basis") {
  XiExpansion x;
  x.arity = 3;
  x.coefficients[{0, 0, 0}] = Rational(1);
  const MultiPoly t1 = MultiPoly::variable(3, 0), t2 = MultiPoly::variable(3, 1),
                  t3 = MultiPoly::variable(3, 2), one = MultiPoly::constant(3, Rational(1));
  CHECK(from_xi_basis(x) == (t1 - one) * (t2 - one) * (t3 - one));

  XiExpansion empty;
  CHECK(from_xi_basis(empty).is_zero());

  XiExpansion h;
  h.coefficients[{1}] = Rational(1, 24);
  h.coefficients[{0}] = Rational(-1, 24);
  MultiPoly expected(1);
  expected.add_term({3}, Rational(1, 24));
  expected.add_term({2}, Rational(-1, 24));
  expected.add_term({1}, Rational(-1, 24));
  expected.add_term({0}, Rational(1, 24));
  CHECK(from_xi_basis(h) == expected);
}

TEST_CASE("property: xi-basis round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> idx(0, 4);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 30; ++trial) {
    XiExpansion x;
    x.arity = 1 + trial % 3;
    for (int k = 0; k < 4; ++k) {
      std::vector<unsigned> n(x.arity);
      for (auto &v : n)
        v = idx(rng);
      Rational c(num(rng), den(rng));
      if (!c.is_zero())
        x.coefficients[n] = c;
    }
    CHECK(to_xi_basis(from_xi_basis(x)) == x);
  }
}
