#pragma once

#include <stdexcept>

namespace hodge::lambert {

/// Partial sum together with a rigorous bound on the omitted tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

/// k^{k+n}/k! e^{-k(w+1)}, evaluated in log space.
double series_term(int k, int n, double w);

/// Bound on sum_{k > K} k^{k+n}/k! e^{-k(w+1)} from
/// k! >= sqrt(2 pi k) k^k e^{-k}, i.e. each term is at most
/// k^{n-1/2} e^{-k w} / sqrt(2 pi).
double tail_bound(int K, int n, double w);

/// Smallest K whose tail bound is below tol.
int terms_for(int n, double w, double tol);

/// sum_{k=1}^{K} k^{k+n}/k! e^{-k(w+1)}.
SeriesValue xi_series(int n, double w, int K);

/// t(w) = 1 + sum_{k>=1} k^k/k! e^{-k(w+1)}. Requires w > 0.
SeriesValue t_of_w(double w, int K);

/// w(t) = -1/t - log(1 - 1/t). Requires t > 1.
double w_of_t(double t);

/// y = xi_{-1}(t) = (t-1)/t.
double xi_minus_one(double t);

/// A point on the curve x = y e^{-y} parametrized by w.
struct LambertPoint {
  double w;
  double t;
  double x;
  double y;

  static LambertPoint from_w(double w, int K);
  /// |x - y e^{-y}|.
  double curve_residual() const;
};

/// |xi_n(t(w)) - series| / |series| with K terms, or throws
/// std::domain_error if the tail bound at K is not below 1e-10.
double xi_series_check(int n, double w, int K);

/// Derivative identity check: |d/dw xi_n(t(w)) + xi_{n+1}(t(w))| by a
/// central difference with the given step.
double derivative_check(int n, double w, double step, int K);

/// sum_k k^{k-2}/k! e^{-k(w+1)}; w >= 0.
SeriesValue h01_series(double w, int K);
/// c = sum_k k^{k-2}/k! e^{-k}.
SeriesValue h01_constant(int K);
/// -1/(2t^2) + c.
double h01_closed(double t, double c);

/// sum_{mu_1, mu_2 <= mu_max} 1/(mu_1+mu_2) mu_1^mu_1/mu_1! mu_2^mu_2/mu_2! e^{-mu_1(w_1+1) - mu_2(w_2+1)}.
double h02_series(double w1, double w2, int mu_max);
/// log((y_1 - y_2)/(x_1 - x_2)) - y_1 - y_2 at the curve points over w_1, w_2.
/// Throws std::domain_error when w_1 == w_2.
double h02_closed(const LambertPoint &p1, const LambertPoint &p2);

} // namespace hodge::lambert
