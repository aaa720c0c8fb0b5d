#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodge/partition.hpp"
#include "hodge/rational.hpp"

namespace hodge {

enum class Provenance { oracle, closed_form, elsv };

std::string to_string(Provenance p);

/// Simple Hurwitz number h_{g,mu}.
struct HurwitzValue {
  int g = 0;
  Partition mu;
  Rational value;
  Provenance provenance = Provenance::oracle;
};

/// H_g(mu) = |Aut(mu)| h_{g,mu} / r(g,mu)!.
struct HFunction {
  int g = 0;
  Partition mu;
  Rational value;
};

/// The enumeration would exceed its leaf budget.
class OracleInfeasible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleOptions {
  /// Upper bound on (number of transpositions in S_d)^r.
  std::uint64_t budget = kDefaultOracleBudget;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Permutation of {0..d-1} stored as its image array.
using Permutation = std::vector<int>;

/// Permutation whose cycles are consecutive blocks of lengths mu_1, mu_2, ...
Permutation standard_permutation(const Partition &mu);

/// (d(d-1)/2)^r, saturating at UINT64_MAX.
std::uint64_t nominal_leaves(int d, int r);

/// Number of r-tuples of transpositions (tau_1, ..., tau_r) in S_d with
/// tau_1 ... tau_r = target and <tau_1, ..., tau_r> transitive.
std::uint64_t count_transitive_factorizations(const Permutation &target, int r,
                                              unsigned threads = 1);

/// Ground truth by enumeration: h = |C_mu| / d! * #factorizations of a fixed
/// permutation of cycle type mu. Throws OracleInfeasible when the nominal
/// leaf count exceeds options.budget.
HurwitzValue hurwitz_oracle(int g, const Partition &mu, const OracleOptions &options = {});

/// Genus-zero closed forms for one or two parts: h_{0,(k)} = k^{k-3} and
/// h_{0,(a,b)} = (a+b)!/(a+b) * a^a/a! * b^b/b! / |Aut(a,b)|.
HurwitzValue hurwitz_closed_form(int g, const Partition &mu);

HFunction h_function(int g, const Partition &mu, const Rational &h);

/// Source of h_{g,mu}; std::nullopt when unavailable.
using HurwitzLookup = std::function<std::optional<Rational>(int g, const Partition &mu)>;

/// How the disconnected-join sum over nu_1 u nu_2 = mu(i^) is indexed.
enum class SplitCounting {
  /// Ordered pairs of complementary index subsets of the remaining parts.
  labeled,
  /// Ordered pairs of complementary sub-multisets, each counted once.
  multiset,
};

struct CajReport {
  int g = 0;
  Partition mu;
  bool feasible = true;
  bool holds = false;
  Rational lhs;
  Rational rhs;
  /// Description of the first missing H value when infeasible.
  std::string missing;

  Rational residual() const { return lhs - rhs; }
};

/// Checks the combinatorial cut-and-join identity
///   r H_g(mu) = sum_{i<j} (mu_i+mu_j) H_g(mu(i^,j^), mu_i+mu_j)
///     + 1/2 sum_i sum_{a+b=mu_i} a b [ H_{g-1}(mu(i^),a,b)
///         + sum_{g1+g2=g, nu1 u nu2 = mu(i^)} H_{g1}(nu1,a) H_{g2}(nu2,b) ]
/// exactly, with H values derived from `lookup`.
CajReport cut_and_join_verify(int g, const Partition &mu, const HurwitzLookup &lookup,
                              SplitCounting counting = SplitCounting::labeled);

/// Memoizing front end to hurwitz_oracle. Budget overruns are remembered
/// and reported as missing values.
class OracleCache {
public:
  explicit OracleCache(OracleOptions options = {}) : options_(options) {}

  std::optional<Rational> operator()(int g, const Partition &mu);
  HurwitzLookup lookup();

private:
  OracleOptions options_;
  std::mutex mutex_;
  std::map<std::pair<int, Partition>, std::optional<Rational>> values_;
};

} // namespace hodge
