#include "hodge/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hodge {

BigInt double_factorial(long n) {
  if (n < -1)
    throw std::domain_error("double_factorial: n must be >= -1, got " + std::to_string(n));
  BigInt result(1);
  for (long k = n; k > 1; k -= 2)
    result *= k;
  return result;
}

BigInt factorial(long n) {
  if (n < 0)
    throw std::domain_error("factorial: negative argument");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt multinomial(long total, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0)
      throw std::domain_error("multinomial: negative part");
    sum += p;
  }
  if (sum != total)
    throw std::domain_error("multinomial: parts sum to " + std::to_string(sum) +
                            ", expected " + std::to_string(total));
  BigInt result = factorial(total);
  for (long p : parts)
    result /= factorial(p);
  return result;
}

BSeries b_coefficients(int g_max) {
  if (g_max < 0)
    throw std::domain_error("b_coefficients: g_max must be >= 0");
  // sin(s/2)/(s/2) = sum_k a_k s^{2k}, a_k = (-1)^k / (4^k (2k+1)!).
  std::vector<Rational> a(g_max + 1);
  for (int k = 0; k <= g_max; ++k) {
    BigInt den = factorial(2 * k + 1);
    den <<= 2 * k;
    a[k] = Rational(BigInt(k % 2 == 0 ? 1 : -1), den);
  }
  // b = 1/a, with a_0 = 1: b_n = -sum_{k=1}^{n} a_k b_{n-k}.
  BSeries b;
  b.coefficients.assign(g_max + 1, Rational(0));
  b.coefficients[0] = Rational(1);
  for (int n = 1; n <= g_max; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k)
      acc += a[k] * b.coefficients[n - k];
    b.coefficients[n] = -acc;
  }
  return b;
}

std::vector<Rational> bernoulli_numbers(int m_max) {
  std::vector<Rational> B(m_max + 1);
  B[0] = Rational(1);
  for (int m = 1; m <= m_max; ++m) {
    Rational acc;
    for (int k = 0; k < m; ++k)
      acc += Rational(binomial(m + 1, k)) * B[k];
    B[m] = -acc / Rational(m + 1);
  }
  return B;
}

Rational b_closed_form(int g) {
  if (g < 0)
    throw std::domain_error("b_closed_form: negative genus");
  if (g == 0)
    return Rational(1);
  auto B = bernoulli_numbers(2 * g);
  BigInt pow2 = BigInt(1) << (2 * g - 1);
  return Rational(pow2 - 1, pow2) * abs(B[2 * g]) / Rational(factorial(2 * g));
}

} // namespace hodge
