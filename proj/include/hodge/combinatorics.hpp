#pragma once

#include <span>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// n!! = n(n-2)(n-4)..., with (-1)!! = 0!! = 1. Throws for n < -1.
BigInt double_factorial(long n);

BigInt factorial(long n);

BigInt binomial(long n, long k);

/// total! / prod(parts_i!). Throws if a part is negative or the parts do
/// not sum to total.
BigInt multinomial(long total, std::span<const long> parts);

/// Coefficients b_0..b_{g_max} of (s/2)/sin(s/2) = sum b_j s^{2j}.
struct BSeries {
  std::vector<Rational> coefficients;

  const Rational &operator[](std::size_t j) const { return coefficients.at(j); }
  std::size_t size() const { return coefficients.size(); }
};

/// Computed by inverting the power series sin(s/2)/(s/2) in s^2.
BSeries b_coefficients(int g_max);

/// Bernoulli numbers B_0..B_{m_max} (B_1 = -1/2) from the recurrence
/// sum_{k=0}^{m} C(m+1, k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int m_max);

/// (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!, from Bernoulli numbers.
Rational b_closed_form(int g);

} // namespace hodge
