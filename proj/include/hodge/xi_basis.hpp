#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hodge/multipoly.hpp"

namespace hodge {

/// The polynomials xi_0(t) = t - 1, xi_{n+1} = t^2 (t-1) d/dt xi_n.
///
/// xi_n has degree 2n+1, leading coefficient (2n-1)!! and lowest term
/// (-1)^n n! t^{n+1} (n >= 1). Values are memoized; the cache only grows
/// and concurrent callers see the same polynomials.
class XiFamily {
public:
  XiFamily();

  /// Arity-1 polynomial xi_n(t). Throws std::domain_error for n < 0.
  MultiPoly operator()(int n) const;

  /// Process-wide shared family.
  static const XiFamily &instance();

private:
  mutable std::mutex mutex_;
  mutable std::vector<MultiPoly> cache_;
};

inline MultiPoly xi(int n) { return XiFamily::instance()(n); }

/// a_1..a_{n_max}: a_1 is the t^3 coefficient of xi_1, then
/// a_n = -[(n+1) a_{n-1} + (-1)^n n!].
std::vector<BigInt> a_sequence(int n_max);

/// Coefficients of a polynomial in the basis prod_i xi_{n_i}(t_i).
struct XiExpansion {
  std::size_t arity = 1;
  std::map<std::vector<unsigned>, Rational> coefficients;

  Rational at(const std::vector<unsigned> &n) const;
  friend bool operator==(const XiExpansion &, const XiExpansion &) = default;
};

/// Leading-term elimination under graded-lex order. Throws
/// NonPolynomialError if p is not in the span of the xi products.
XiExpansion to_xi_basis(const MultiPoly &p);

MultiPoly from_xi_basis(const XiExpansion &x);

/// prod_i xi_{n_i}(t_i).
MultiPoly xi_product(const std::vector<unsigned> &n);

} // namespace hodge
