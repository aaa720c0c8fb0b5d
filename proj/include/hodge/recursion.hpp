#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "hodge/hurwitz.hpp"
#include "hodge/multipoly.hpp"
#include "hodge/xi_basis.hpp"

namespace hodge {

/// Stable (g, l): 2g - 2 + l > 0.
struct HodgeKey {
  int g = 0;
  int ell = 1;

  int euler() const { return 2 * g - 2 + ell; }
  bool stable() const { return g >= 0 && ell >= 1 && euler() > 0; }

  friend auto operator<=>(const HodgeKey &, const HodgeKey &) = default;
};

/// All stable keys with 2g - 2 + l <= max_euler, ordered by (euler, g).
std::vector<HodgeKey> stable_keys(int max_euler);

/// Which form of the recursion assembles the right-hand side.
enum class RecursionForm {
  /// D_i-operator form with the (t_i - t_j) divided differences.
  polynomial,
  /// Laplace-transformed cut-and-join form with (1 - xi_{-1}(t_i)) weights.
  laplace,
};

/// (2g-2+l + sum_i t_i (t_i - 1) d/dt_i) p: the left-hand operator.
MultiPoly apply_lhs_operator(const MultiPoly &p, int euler);

/// Solves apply_lhs_operator(H, euler) = rhs for H by graded-lex leading
/// term elimination. Throws NonPolynomialError if rhs is not in the image.
MultiPoly solve_lhs_operator(const MultiPoly &rhs, int euler);

/// The two seeded polynomials: H_{0,3} = xi_0 xi_0 xi_0 and
/// H_{1,1} = (xi_1 - xi_0)/24.
MultiPoly seed_polynomial(HodgeKey key);
bool is_seed(HodgeKey key);

/// Memoized H_{g,l} polynomials for one recursion form. Lookups of a key
/// compute every prerequisite first. Fills are idempotent: a key is
/// computed from lower-complexity entries only, so concurrent fills of
/// different keys at the same level yield the same table.
class HodgeCache {
public:
  explicit HodgeCache(RecursionForm form = RecursionForm::polynomial) : form_(form) {}

  RecursionForm form() const { return form_; }

  const MultiPoly &get(HodgeKey key);
  bool contains(HodgeKey key) const;

  /// Fills all keys with 2g-2+l <= max_euler, level by level. Keys within
  /// a level are spread over `threads` workers.
  void fill(int max_euler, unsigned threads = 1);

  /// Number of polynomials produced by the recursion (seeds and entries
  /// loaded from disk do not count).
  std::size_t recursion_count() const;

  std::map<HodgeKey, MultiPoly> snapshot() const;

  /// JSON cache file, see README for the schema.
  void save(const std::filesystem::path &path) const;
  /// Loads entries from a cache file written by save(). Throws
  /// std::runtime_error on a malformed or version-mismatched file.
  void load(const std::filesystem::path &path);

private:
  const MultiPoly *find(HodgeKey key) const;
  void insert(HodgeKey key, MultiPoly poly, bool computed);

  RecursionForm form_;
  mutable std::mutex mutex_;
  std::map<HodgeKey, MultiPoly> entries_;
  std::size_t computed_ = 0;
};

/// H_{g,l} from the recursion in D_i form. Prerequisites are taken
/// from (and added to) `cache`.
MultiPoly compute_H(int g, int ell, HodgeCache &cache);

/// Same polynomial assembled from the Laplace-transformed cut-and-join form.
MultiPoly compute_H_alt(int g, int ell, HodgeCache &cache);

/// Right-hand side of the recursion for a non-seed key, for inspection.
MultiPoly recursion_rhs(HodgeKey key, HodgeCache &cache);

/// <tau_{n_1} ... tau_{n_l} lambda_j>_{g,l}, keyed with n sorted ascending.
class HodgeTable {
public:
  struct Key {
    int g;
    std::vector<unsigned> n;
    int j;
    friend auto operator<=>(const Key &, const Key &) = default;
  };

  /// Zero when absent; n need not be sorted.
  Rational get(int g, std::vector<unsigned> n, int j) const;
  void set(int g, std::vector<unsigned> n, int j, const Rational &value);

  bool has_key(HodgeKey key) const { return complete_.count(key) != 0; }
  void mark_complete(HodgeKey key) { complete_.insert(key); }

  /// <tau_n Lambda_g^vee(1)>_{g,l} = (-1)^j <tau_n lambda_j>, j fixed by
  /// dimension; zero outside 0 <= j <= g.
  Rational lambda_dual(int g, const std::vector<unsigned> &n) const;

  const std::map<Key, Rational> &entries() const { return entries_; }

  void merge(const HodgeTable &other);

private:
  std::map<Key, Rational> entries_;
  std::set<HodgeKey> complete_;
};

/// Reads the linear Hodge integrals off the xi-expansion of H_{g,l}.
/// Throws NonPolynomialError on support outside 0 <= j <= g or on an
/// expansion that is not permutation-symmetric.
HodgeTable extract_hodge(int g, int ell, const MultiPoly &H);

/// Table for every stable key up to max_euler.
HodgeTable build_hodge_table(HodgeCache &cache, int max_euler);
HodgeTable build_hodge_table(HodgeCache &cache, const std::vector<HodgeKey> &keys);

/// h_{g,mu} from the ELSV formula. The unstable (0,1) and (0,2) cases use
/// the defined integrals 1/k^2 and 1/(mu_1 + mu_2). Throws
/// std::out_of_range when the table lacks (g, l(mu)).
HurwitzValue elsv_evaluate(int g, const Partition &mu, const HodgeTable &table);

} // namespace hodge
