#include "doctest.h"

#include <cmath>

#include "hodge/lambert.hpp"
#include "hodge/multipoly.hpp"
#include "hodge/xi_basis.hpp"

using namespace hodge;
using namespace hodge::lambert;

TEST_CASE("t(w) and w(t)") {
  const auto p = LambertPoint::from_w(1.0, 200);
  CHECK(p.curve_residual() < 1e-12);
  CHECK(t_of_w(20.0, 50).value == doctest::Approx(1.0 + std::exp(-21.0)).epsilon(1e-15));
  CHECK(w_of_t(t_of_w(0.5, 400).value) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(w_of_t(2.0) == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-14));
  CHECK(w_of_t(1e6) > 0.0);
  CHECK(w_of_t(1e6) < 1e-11);
  CHECK(std::abs(w_of_t(t_of_w(1.0, 200).value) - 1.0) < 1e-10);
  CHECK_THROWS(t_of_w(0.0, 10));
  CHECK_THROWS(w_of_t(1.0));
}

TEST_CASE("tail bound dominates the actual tail") {
  for (double w : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 4; ++n) {
      const int K = 30;
      const double bound = tail_bound(K, n, w);
      double tail = 0.0;
      for (int k = K + 1; k <= 2000; ++k)
        tail += series_term(k, n, w);
      CHECK(tail <= bound);
    }
  CHECK_THROWS(tail_bound(10, 0, 0.0));
}

TEST_CASE("xi_n(t(w)) against the defining series") {
  CHECK(xi_series_check(0, 1.0, terms_for(0, 1.0, 1e-12)) < 1e-8);
  CHECK(xi_series_check(1, 1.0, terms_for(1, 1.0, 1e-12)) < 1e-8);
  CHECK(xi_series_check(4, 0.5, terms_for(4, 0.5, 1e-12)) < 1e-8);
  CHECK_THROWS_AS(xi_series_check(4, 0.5, 5), std::domain_error);
}

TEST_CASE("d/dw xi_n = -xi_{n+1}") {
  for (int n = 0; n <= 3; ++n)
    CHECK(derivative_check(n, 1.0, 1e-5, 400) < 1e-6);
}

TEST_CASE("xi_{-1} is y") {
  for (double w : {0.5, 1.0, 2.0}) {
    const auto p = LambertPoint::from_w(w, 600);
    CHECK(xi_minus_one(p.t) == doctest::Approx(p.y).epsilon(1e-14));
    CHECK(p.curve_residual() < 1e-10);
  }
}

TEST_CASE("unstable geometries") {
  const auto c = h01_constant(2000);
  CHECK(c.value < 0.5);
  CHECK(0.5 - c.value <= c.tail_bound);
  const auto t = t_of_w(1.0, 200).value;
  CHECK(std::abs(h01_series(1.0, 200).value - h01_closed(t, 0.5)) < 1e-8);

  const auto p1 = LambertPoint::from_w(1.0, 200), p2 = LambertPoint::from_w(1.5, 200);
  CHECK(std::abs(h02_series(1.0, 1.5, 60) - h02_closed(p1, p2)) < 1e-8);
  const auto q1 = LambertPoint::from_w(0.5, 600), q2 = LambertPoint::from_w(2.0, 200);
  CHECK(std::abs(h02_series(0.5, 2.0, 200) - h02_closed(q1, q2)) < 1e-8);
  CHECK_THROWS_AS(h02_closed(p1, p1), std::domain_error);
}
