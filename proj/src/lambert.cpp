#include "hodge/lambert.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hodge/xi_basis.hpp"

namespace hodge::lambert {

double series_term(int k, int n, double w) {
  const double kd = k;
  return std::exp((kd + n) * std::log(kd) - std::lgamma(kd + 1.0) - kd * (w + 1.0));
}

double tail_bound(int K, int n, double w) {
  if (w <= 0)
    throw std::domain_error("tail_bound: requires w > 0");
  // Terms are bounded by b_k = k^{s} e^{-k w} / sqrt(2 pi), s = n - 1/2.
  // For s <= 0 the ratio b_{k+1}/b_k is at most e^{-w}; otherwise it is
  // at most ((K+2)/(K+1))^s e^{-w} for k > K, once that is below one.
  const double s = n - 0.5;
  double ratio = std::exp(-w);
  if (s > 0)
    ratio *= std::pow((K + 2.0) / (K + 1.0), s);
  if (ratio >= 1.0)
    return INFINITY;
  const double first = std::pow(K + 1.0, s) * std::exp(-(K + 1.0) * w) /
                       std::sqrt(2.0 * std::numbers::pi);
  return first / (1.0 - ratio);
}

int terms_for(int n, double w, double tol) {
  int K = 1;
  while (tail_bound(K, n, w) >= tol) {
    K *= 2;
    if (K > (1 << 26))
      throw std::domain_error("terms_for: tolerance unreachable");
  }
  // Bisect down to the smallest sufficient K.
  int lo = K / 2, hi = K;
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    (tail_bound(mid, n, w) < tol ? hi : lo) = mid;
  }
  return hi;
}

namespace {

SeriesValue sum_terms(int n, double w, int K) {
  // Kahan summation keeps rounding well under the tail bound.
  double sum = 0.0, comp = 0.0;
  for (int k = 1; k <= K; ++k) {
    double y = series_term(k, n, w) - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return {sum, 0.0, K};
}

} // namespace

SeriesValue xi_series(int n, double w, int K) {
  SeriesValue v = sum_terms(n, w, K);
  v.tail_bound = tail_bound(K, n, w);
  return v;
}

SeriesValue t_of_w(double w, int K) {
  if (w <= 0)
    throw std::domain_error("t_of_w: requires w > 0");
  if (K < 1)
    throw std::domain_error("t_of_w: requires K >= 1");
  SeriesValue v = xi_series(0, w, K);
  v.value += 1.0;
  return v;
}

double w_of_t(double t) {
  if (!(t > 1.0))
    throw std::domain_error("w_of_t: requires t > 1");
  return -1.0 / t - std::log1p(-1.0 / t);
}

double xi_minus_one(double t) { return (t - 1.0) / t; }

LambertPoint LambertPoint::from_w(double w, int K) {
  const double t = t_of_w(w, K).value;
  return {w, t, std::exp(-(w + 1.0)), xi_minus_one(t)};
}

double LambertPoint::curve_residual() const { return std::abs(x - y * std::exp(-y)); }

double xi_series_check(int n, double w, int K) {
  if (n < 0)
    throw std::domain_error("xi_series_check: requires n >= 0");
  const SeriesValue series = xi_series(n, w, K);
  if (!(series.tail_bound < 1e-10))
    throw std::domain_error("xi_series_check: tail bound not met at the given K");
  const double t = t_of_w(w, std::max(K, terms_for(0, w, 1e-15))).value;
  const double poly = evaluate(xi(n), std::vector<double>{t});
  return std::abs(poly - series.value) / std::abs(series.value);
}

double derivative_check(int n, double w, double step, int K) {
  auto xi_at = [&](int m, double ww) {
    return evaluate(xi(m), std::vector<double>{t_of_w(ww, K).value});
  };
  const double fd = (xi_at(n, w + step) - xi_at(n, w - step)) / (2.0 * step);
  return std::abs(fd + xi_at(n + 1, w));
}

SeriesValue h01_series(double w, int K) {
  SeriesValue v = sum_terms(-2, w, K);
  v.tail_bound = tail_bound(K, -2, w);
  return v;
}

SeriesValue h01_constant(int K) {
  SeriesValue v = sum_terms(-2, 0.0, K);
  // Terms are at most k^{-5/2}/sqrt(2 pi); the tail is below the integral
  // of that from K to infinity.
  v.tail_bound = (2.0 / 3.0) * std::pow(static_cast<double>(K), -1.5) /
                 std::sqrt(2.0 * std::numbers::pi);
  return v;
}

double h01_closed(double t, double c) { return -1.0 / (2.0 * t * t) + c; }

double h02_series(double w1, double w2, int mu_max) {
  std::vector<double> a(mu_max + 1), b(mu_max + 1);
  for (int k = 1; k <= mu_max; ++k) {
    a[k] = series_term(k, 0, w1);
    b[k] = series_term(k, 0, w2);
  }
  double sum = 0.0;
  for (int m1 = mu_max; m1 >= 1; --m1)
    for (int m2 = mu_max; m2 >= 1; --m2)
      sum += a[m1] * b[m2] / (m1 + m2);
  return sum;
}

double h02_closed(const LambertPoint &p1, const LambertPoint &p2) {
  if (p1.w == p2.w)
    throw std::domain_error("h02_closed: requires distinct points");
  return std::log((p1.y - p2.y) / (p1.x - p2.x)) - p1.y - p2.y;
}

} // namespace hodge::lambert
