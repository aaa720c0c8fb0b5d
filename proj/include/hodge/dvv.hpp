#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hodge/combinatorics.hpp"
#include "hodge/multipoly.hpp"
#include "hodge/rational.hpp"
#include "hodge/recursion.hpp"

namespace hodge {

/// psi-class intersection numbers <tau_{n_1} ... tau_{n_l}>_g from the DVV
/// recursion, seeded with <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24. Memoized
/// with n sorted.
class PsiTable {
public:
  /// Zero off-dimension (|n| != 3g-3+l) or for unstable (g, l).
  Rational operator()(int g, std::vector<unsigned> n);

  const std::map<std::pair<int, std::vector<unsigned>>, Rational> &values() const { return memo_; }

private:
  Rational compute(int g, const std::vector<unsigned> &n);

  std::recursive_mutex mutex_;
  std::map<std::pair<int, std::vector<unsigned>>, Rational> memo_;
};

Rational psi_intersection(int g, const std::vector<unsigned> &n);

/// One disagreement between two routes to the same number.
struct Mismatch {
  std::string what;
  Rational expected;
  Rational actual;
};

/// Top-degree check: for every n with |n| = 3g-3+l, the xi-coefficient of
/// H_{g,l} at n equals <tau_n>_g, and the coefficient of
/// t_1^{2n_1+2} prod_{j>=2} t_j^{2n_j+1} in the left-hand side of the
/// recursion equals <tau_n> (2n_1+1)!! prod_{j>=2} (2n_j-1)!!.
std::vector<Mismatch> check_top_degree(int g, int ell, const MultiPoly &H, PsiTable &psi);

/// Lowest-degree (lambda_g) checks for g >= 1 against a Hodge table that
/// holds (g, l) and, for l >= 2, (g, l-1):
///   <tau_n lambda_g> = multinomial(2g-3+l; n) <tau_{2g-2} lambda_g>_{g,1},
///   <tau_{2g-2} lambda_g>_{g,1} = b_g,
///   (l-1) <tau_n lambda_g> = sum_{i<j} C(n_i+n_j, n_i) <tau_{n_i+n_j-1} tau_rest lambda_g>.
std::vector<Mismatch> check_lambda_g(int g, int ell, const HodgeTable &table, const BSeries &b);

/// Tuples n in N^l with |n| = total, lexicographic.
std::vector<std::vector<unsigned>> compositions(std::size_t ell, unsigned total);

} // namespace hodge
