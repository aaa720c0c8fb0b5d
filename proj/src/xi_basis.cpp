#include "hodge/xi_basis.hpp"

#include <numeric>
#include <string>

#include "hodge/combinatorics.hpp"

namespace hodge {

XiFamily::XiFamily() {
  MultiPoly xi0(1);
  xi0.add_term({1}, Rational(1));
  xi0.add_term({0}, Rational(-1));
  cache_.push_back(std::move(xi0));
}

MultiPoly XiFamily::operator()(int n) const {
  if (n < 0)
    throw std::domain_error("xi: negative index " + std::to_string(n) +
                            " has no polynomial form");
  std::lock_guard lock(mutex_);
  while (cache_.size() <= static_cast<std::size_t>(n))
    cache_.push_back(apply_D(cache_.back(), 0));
  return cache_[n];
}

const XiFamily &XiFamily::instance() {
  static const XiFamily family;
  return family;
}

std::vector<BigInt> a_sequence(int n_max) {
  if (n_max < 1)
    throw std::domain_error("a_sequence: n_max must be >= 1");
  std::vector<BigInt> a;
  a.push_back(xi(1).coefficient({3}).numerator());
  for (int n = 2; n <= n_max; ++n) {
    BigInt sign_fact = factorial(n);
    if (n % 2 != 0)
      sign_fact = -sign_fact;
    a.push_back(-(BigInt(n + 1) * a.back() + sign_fact));
  }
  return a;
}

Rational XiExpansion::at(const std::vector<unsigned> &n) const {
  auto it = coefficients.find(n);
  return it == coefficients.end() ? Rational(0) : it->second;
}

MultiPoly xi_product(const std::vector<unsigned> &n) {
  const std::size_t arity = n.size();
  MultiPoly out = MultiPoly::constant(arity, Rational(1));
  for (std::size_t i = 0; i < arity; ++i) {
    std::size_t target[] = {i};
    out = out * remap(xi(static_cast<int>(n[i])), arity, target);
  }
  return out;
}

XiExpansion to_xi_basis(const MultiPoly &p) {
  XiExpansion result;
  result.arity = p.arity();
  MultiPoly residue = p;
  while (!residue.is_zero()) {
    const auto [lead, coeff] = residue.leading_term();
    std::vector<unsigned> n(lead.size());
    BigInt norm(1);
    for (std::size_t i = 0; i < lead.size(); ++i) {
      if (lead[i] % 2 == 0)
        throw NonPolynomialError("to_xi_basis: leading monomial has even exponent in t" +
                                 std::to_string(i + 1) + "; not in the xi span");
      n[i] = (lead[i] - 1) / 2;
      norm *= double_factorial(2 * static_cast<long>(n[i]) - 1);
    }
    Rational c = coeff / Rational(norm);
    result.coefficients[n] += c;
    residue -= xi_product(n) * c;
  }
  std::erase_if(result.coefficients, [](const auto &kv) { return kv.second.is_zero(); });
  return result;
}

MultiPoly from_xi_basis(const XiExpansion &x) {
  MultiPoly out(x.arity);
  for (const auto &[n, c] : x.coefficients) {
    if (n.size() != x.arity)
      throw std::invalid_argument("from_xi_basis: index tuple length does not match arity");
    out += xi_product(n) * c;
  }
  return out;
}

} // namespace hodge
