#include "hodge/hurwitz.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "hodge/combinatorics.hpp"

namespace hodge {

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::oracle: return "oracle";
  case Provenance::closed_form: return "closed_form";
  case Provenance::elsv: return "elsv";
  }
  return "unknown";
}

Permutation standard_permutation(const Partition &mu) {
  Permutation sigma(mu.size());
  int start = 0;
  for (int part : mu.parts()) {
    for (int k = 0; k < part; ++k)
      sigma[start + k] = start + (k + 1) % part;
    start += part;
  }
  return sigma;
}

std::uint64_t nominal_leaves(int d, int r) {
  const std::uint64_t n = static_cast<std::uint64_t>(d) * (d - 1) / 2;
  std::uint64_t total = 1;
  for (int k = 0; k < r; ++k) {
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n)
      return std::numeric_limits<std::uint64_t>::max();
    total *= n;
  }
  return total;
}

namespace {

struct Transposition {
  int a, b;
};

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    parent_[x] = y;
    return true;
  }

private:
  std::vector<int> parent_;
};

// Depth-first enumeration of tau_1..tau_{r-1}; tau_r is forced by the
// target. prefix holds the product tau_1...tau_k as an image array, where
// composing with tau on the right swaps two entries. Transitivity is only
// decidable at the leaves since later factors can still merge orbits.
class FactorizationCounter {
public:
  FactorizationCounter(const Permutation &target, int r)
      : target_(target), d_(static_cast<int>(target.size())), r_(r) {
    for (int a = 0; a < d_; ++a)
      for (int b = a + 1; b < d_; ++b)
        transpositions_.push_back({a, b});
  }

  std::size_t strata() const { return transpositions_.size(); }

  std::uint64_t count_all() {
    Permutation prefix(d_);
    std::iota(prefix.begin(), prefix.end(), 0);
    chosen_.clear();
    return descend(prefix);
  }

  std::uint64_t count_stratum(std::size_t first) {
    Permutation prefix(d_);
    std::iota(prefix.begin(), prefix.end(), 0);
    chosen_.assign(1, transpositions_[first]);
    std::swap(prefix[transpositions_[first].a], prefix[transpositions_[first].b]);
    return descend(prefix);
  }

private:
  std::uint64_t descend(Permutation &prefix) {
    const int depth = static_cast<int>(chosen_.size());
    if (depth == r_)
      return prefix == target_ && transitive() ? 1 : 0;
    if (depth == r_ - 1)
      return close(prefix);
    std::uint64_t total = 0;
    for (const auto &t : transpositions_) {
      std::swap(prefix[t.a], prefix[t.b]);
      chosen_.push_back(t);
      total += descend(prefix);
      chosen_.pop_back();
      std::swap(prefix[t.a], prefix[t.b]);
    }
    return total;
  }

  // prefix * tau = target  <=>  tau = prefix^{-1} * target.
  std::uint64_t close(const Permutation &prefix) {
    inverse_.resize(d_);
    for (int x = 0; x < d_; ++x)
      inverse_[prefix[x]] = x;
    int moved[3];
    int n_moved = 0;
    for (int x = 0; x < d_; ++x) {
      if (inverse_[target_[x]] != x) {
        if (n_moved == 2)
          return 0;
        moved[n_moved++] = x;
      }
    }
    if (n_moved != 2 || inverse_[target_[moved[0]]] != moved[1])
      return 0;
    chosen_.push_back({moved[0], moved[1]});
    bool ok = transitive();
    chosen_.pop_back();
    return ok ? 1 : 0;
  }

  bool transitive() const {
    UnionFind uf(d_);
    int components = d_;
    for (const auto &t : chosen_)
      if (uf.unite(t.a, t.b))
        --components;
    return components == 1;
  }

  const Permutation &target_;
  int d_;
  int r_;
  std::vector<Transposition> transpositions_;
  std::vector<Transposition> chosen_;
  Permutation inverse_;
};

} // namespace

std::uint64_t count_transitive_factorizations(const Permutation &target, int r,
                                              unsigned threads) {
  if (r < 0)
    throw std::domain_error("count_transitive_factorizations: negative length");
  FactorizationCounter root(target, r);
  if (r < 2 || root.strata() == 0 || threads <= 1)
    return root.count_all();

  const std::size_t strata = root.strata();
  std::vector<std::uint64_t> per_stratum(strata, 0);
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(strata));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      FactorizationCounter counter(target, r);
      for (std::size_t s = w; s < strata; s += workers)
        per_stratum[s] = counter.count_stratum(s);
    });
  }
  pool.clear();
  return std::accumulate(per_stratum.begin(), per_stratum.end(), std::uint64_t{0});
}

HurwitzValue hurwitz_oracle(int g, const Partition &mu, const OracleOptions &options) {
  if (g < 0)
    throw std::domain_error("hurwitz_oracle: negative genus");
  if (mu.empty())
    throw std::domain_error("hurwitz_oracle: degree must be >= 1");
  const int r = rh_count(g, mu);
  const int d = mu.size();
  const std::uint64_t leaves = nominal_leaves(d, r);
  if (leaves > options.budget)
    throw OracleInfeasible("hurwitz_oracle: g=" + std::to_string(g) + ", mu=" + mu.to_string() +
                           " needs " + std::to_string(leaves) + " leaves, budget " +
                           std::to_string(options.budget));

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t count = count_transitive_factorizations(standard_permutation(mu), r, threads);

  // |C_mu| / d! = 1 / (prod mu_i * prod m_k!)
  BigInt centralizer = aut_order(mu);
  for (int part : mu.parts())
    centralizer *= part;
  BigInt numerator;
  mpz_set_ui(numerator.get_mpz_t(), count);
  return {g, mu, Rational(numerator, centralizer), Provenance::oracle};
}

HurwitzValue hurwitz_closed_form(int g, const Partition &mu) {
  if (g != 0 || mu.length() < 1 || mu.length() > 2)
    throw std::domain_error("hurwitz_closed_form: only g = 0 with one or two parts");
  auto weight = [](int k) {
    BigInt kk;
    mpz_ui_pow_ui(kk.get_mpz_t(), k, k);
    return Rational(kk, factorial(k));
  };
  Rational value;
  if (mu.length() == 1) {
    // k^{k-3} = k^k / k^3
    const int k = mu[0];
    BigInt kk;
    mpz_ui_pow_ui(kk.get_mpz_t(), k, k);
    value = Rational(kk, BigInt(k) * k * k);
  } else {
    const int d = mu.size();
    value = Rational(factorial(d), BigInt(d)) * weight(mu[0]) * weight(mu[1]) /
            Rational(aut_order(mu));
  }
  return {g, mu, value, Provenance::closed_form};
}

HFunction h_function(int g, const Partition &mu, const Rational &h) {
  const int r = rh_count(g, mu);
  return {g, mu, Rational(aut_order(mu)) * h / Rational(factorial(r))};
}

namespace {

struct MissingValue {
  std::string what;
};

class HEvaluator {
public:
  explicit HEvaluator(const HurwitzLookup &lookup) : lookup_(lookup) {}

  Rational operator()(int g, const Partition &mu) const {
    if (g < 0)
      return Rational(0);
    auto h = lookup_(g, mu);
    if (!h)
      throw MissingValue{"H_" + std::to_string(g) + mu.to_string()};
    return h_function(g, mu, *h).value;
  }

private:
  const HurwitzLookup &lookup_;
};

// Ordered pairs (nu1, nu2) with nu1 u nu2 = rest, listed with multiplicity.
std::vector<std::pair<std::vector<int>, std::vector<int>>>
disjoint_splits(const Partition &rest, SplitCounting counting) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  if (counting == SplitCounting::labeled) {
    const std::size_t n = rest.length();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> a, b;
      for (std::size_t k = 0; k < n; ++k)
        ((mask >> k) & 1u ? a : b).push_back(rest[k]);
      out.emplace_back(std::move(a), std::move(b));
    }
    return out;
  }
  const auto counts = rest.multiplicities();
  std::vector<std::pair<int, int>> mult(counts.begin(), counts.end());
  std::vector<int> choice(mult.size(), 0);
  while (true) {
    std::vector<int> a, b;
    for (std::size_t k = 0; k < mult.size(); ++k) {
      a.insert(a.end(), choice[k], mult[k].first);
      b.insert(b.end(), mult[k].second - choice[k], mult[k].first);
    }
    out.emplace_back(std::move(a), std::move(b));
    std::size_t k = 0;
    while (k < mult.size() && choice[k] == mult[k].second)
      choice[k++] = 0;
    if (k == mult.size())
      break;
    ++choice[k];
  }
  return out;
}

Partition appended(std::vector<int> parts, std::initializer_list<int> extra) {
  parts.insert(parts.end(), extra);
  return Partition(std::move(parts));
}

} // namespace

CajReport cut_and_join_verify(int g, const Partition &mu, const HurwitzLookup &lookup,
                              SplitCounting counting) {
  CajReport report;
  report.g = g;
  report.mu = mu;
  HEvaluator H(lookup);
  try {
    report.lhs = Rational(rh_count(g, mu)) * H(g, mu);

    Rational joins;
    for (std::size_t i = 0; i < mu.length(); ++i)
      for (std::size_t j = i + 1; j < mu.length(); ++j)
        joins += Rational(mu[i] + mu[j]) * H(g, join_parts(mu, i, j));

    Rational cuts;
    for (std::size_t i = 0; i < mu.length(); ++i) {
      const Partition rest = remove_part(mu, i);
      const auto splits = disjoint_splits(rest, counting);
      for (int alpha = 1; alpha < mu[i]; ++alpha) {
        const int beta = mu[i] - alpha;
        Rational bracket = H(g - 1, appended(rest.parts(), {alpha, beta}));
        for (int g1 = 0; g1 <= g; ++g1)
          for (const auto &[nu1, nu2] : splits)
            bracket += H(g1, appended(nu1, {alpha})) * H(g - g1, appended(nu2, {beta}));
        cuts += Rational(alpha * beta) * bracket;
      }
    }
    report.rhs = joins + cuts / Rational(2);
    report.holds = report.lhs == report.rhs;
  } catch (const MissingValue &m) {
    report.feasible = false;
    report.holds = false;
    report.missing = m.what;
  }
  return report;
}

std::optional<Rational> OracleCache::operator()(int g, const Partition &mu) {
  const auto key = std::make_pair(g, mu);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end())
      return it->second;
  }
  std::optional<Rational> value;
  try {
    value = hurwitz_oracle(g, mu, options_).value;
  } catch (const OracleInfeasible &) {
    value.reset();
  }
  std::lock_guard lock(mutex_);
  values_.emplace(key, value);
  return value;
}

HurwitzLookup OracleCache::lookup() {
  return [this](int g, const Partition &m) { return (*this)(g, m); };
}

} // namespace hodge
