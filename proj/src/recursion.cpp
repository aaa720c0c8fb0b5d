#include "hodge/recursion.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "json.hpp"

#include "hodge/combinatorics.hpp"

namespace hodge {

std::vector<HodgeKey> stable_keys(int max_euler) {
  std::vector<HodgeKey> keys;
  for (int chi = 1; chi <= max_euler; ++chi)
    for (int g = 0; 2 * g - 2 < chi; ++g) {
      int ell = chi - 2 * g + 2;
      if (ell >= 1)
        keys.push_back({g, ell});
    }
  return keys;
}

MultiPoly apply_lhs_operator(const MultiPoly &p, int euler) {
  // t (t-1) d/dt sends t^e to e t^{e+1} - e t^e.
  MultiPoly out = p * Rational(euler);
  for (const auto &[e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      Rational k = c * Rational(static_cast<long>(e[i]));
      Exponents f = e;
      out.add_term(f, -k);
      ++f[i];
      out.add_term(f, k);
    }
  return out;
}

MultiPoly solve_lhs_operator(const MultiPoly &rhs, int euler) {
  if (euler <= 0)
    throw std::domain_error("solve_lhs_operator: 2g-2+l must be positive");
  // The grlex-leading monomial of L(t^e) is t^{e + 1_k} (coefficient e_k)
  // with k the first index where e_k > 0, or the constant (coefficient
  // euler) when e = 0. That map is injective and order preserving, so the
  // leading term of the residue determines the next term of the solution.
  MultiPoly solution(rhs.arity());
  MultiPoly residue = rhs;
  while (!residue.is_zero()) {
    const auto [lead, coeff] = residue.leading_term();
    Exponents e = lead;
    Rational c;
    auto first = std::find_if(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    if (first == e.end()) {
      c = coeff / Rational(euler);
    } else {
      if (*first < 2)
        throw NonPolynomialError("solve_lhs_operator: residue term outside the operator image");
      --*first;
      c = coeff / Rational(static_cast<long>(*first));
    }
    MultiPoly term = MultiPoly::monomial(e, c);
    solution += term;
    residue -= apply_lhs_operator(term, euler);
  }
  return solution;
}

bool is_seed(HodgeKey key) {
  return (key.g == 0 && key.ell == 3) || (key.g == 1 && key.ell == 1);
}

MultiPoly seed_polynomial(HodgeKey key) {
  if (key.g == 0 && key.ell == 3)
    return xi_product({0, 0, 0});
  if (key.g == 1 && key.ell == 1)
    return (xi(1) - xi(0)) * Rational(1, 24);
  throw std::invalid_argument("seed_polynomial: not a seeded key");
}

namespace {

std::vector<std::size_t> all_but(std::size_t ell, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ell; ++k)
    if (k != skip)
      out.push_back(k);
  return out;
}

// H_{g,|rest|} placed on the variables listed in rest.
MultiPoly embed(const MultiPoly &h, std::size_t ell, const std::vector<std::size_t> &rest) {
  return remap(h, ell, rest);
}

// H_{g', |others|+1}(t_i, t_others).
MultiPoly embed_with_head(const MultiPoly &h, std::size_t ell, std::size_t head,
                          const std::vector<std::size_t> &others) {
  std::vector<std::size_t> target{head};
  target.insert(target.end(), others.begin(), others.end());
  return remap(h, ell, target);
}

// H_{g-1, l+1}(u_1, u_2, t_{L\i}) with u_1 = u_2 = t_i.
MultiPoly diagonal(const MultiPoly &h, std::size_t ell, std::size_t i) {
  std::vector<std::size_t> target{i, i};
  auto rest = all_but(ell, i);
  target.insert(target.end(), rest.begin(), rest.end());
  return remap(h, ell, target);
}

// Polynomial t_i^a (t_i - 1)^b in `ell` variables.
MultiPoly power_factor(std::size_t ell, std::size_t i, unsigned a, unsigned b) {
  MultiPoly base = MultiPoly::constant(ell, Rational(1));
  MultiPoly t_minus_one = MultiPoly::variable(ell, i) - MultiPoly::constant(ell, Rational(1));
  for (unsigned k = 0; k < b; ++k)
    base = base * t_minus_one;
  return shift(base, i, a);
}

const MultiPoly &require(HodgeCache &cache, int g, int ell) {
  HodgeKey key{g, ell};
  if (!key.stable())
    throw std::logic_error("recursion reached unstable key (" + std::to_string(g) + "," +
                           std::to_string(ell) + "); the seeds should cover it");
  return cache.get(key);
}

struct Split {
  int g1;
  std::vector<std::size_t> J, K;
};

// Ordered (g1, J) / (g - g1, K) splits of L \ {i} with both halves stable
// as (g1, |J|+1) and (g2, |K|+1).
std::vector<Split> stable_splits(int g, std::size_t ell, std::size_t i) {
  const auto rest = all_but(ell, i);
  std::vector<Split> out;
  for (int g1 = 0; g1 <= g; ++g1) {
    const int g2 = g - g1;
    for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
      Split s{g1, {}, {}};
      for (std::size_t k = 0; k < rest.size(); ++k)
        ((mask >> k) & 1u ? s.J : s.K).push_back(rest[k]);
      if (2 * g1 - 1 + static_cast<int>(s.J.size()) > 0 &&
          2 * g2 - 1 + static_cast<int>(s.K.size()) > 0)
        out.push_back(std::move(s));
    }
  }
  return out;
}

MultiPoly rhs_polynomial_form(int g, int ell, HodgeCache &cache) {
  const std::size_t L = static_cast<std::size_t>(ell);
  MultiPoly rhs(L);

  if (ell >= 2) {
    const MultiPoly &lower = require(cache, g, ell - 1);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i + 1; j < L; ++j) {
        MultiPoly ti_part = apply_D(embed(lower, L, all_but(L, j)), i);
        MultiPoly tj_part = apply_D(embed(lower, L, all_but(L, i)), j);
        MultiPoly xi0_tj = remap(xi(0), L, std::vector<std::size_t>{j});
        MultiPoly xi0_ti = remap(xi(0), L, std::vector<std::size_t>{i});
        MultiPoly numerator = shift(xi0_tj * ti_part, i, 2) - shift(xi0_ti * tj_part, j, 2);
        rhs += divided_difference(numerator, i, j);
      }
  }

  if (g >= 1) {
    const MultiPoly &higher = require(cache, g - 1, ell + 1);
    MultiPoly dd = apply_D(apply_D(higher, 0), 1);
    MultiPoly sum(L);
    for (std::size_t i = 0; i < L; ++i)
      sum += diagonal(dd, L, i);
    rhs += sum * Rational(1, 2);
  }

  MultiPoly products(L);
  for (std::size_t i = 0; i < L; ++i)
    for (const auto &s : stable_splits(g, L, i)) {
      const MultiPoly &h1 = require(cache, s.g1, static_cast<int>(s.J.size()) + 1);
      const MultiPoly &h2 = require(cache, g - s.g1, static_cast<int>(s.K.size()) + 1);
      products += apply_D(embed_with_head(h1, L, i, s.J), i) *
                  apply_D(embed_with_head(h2, L, i, s.K), i);
    }
  rhs += products * Rational(1, 2);
  return rhs;
}

MultiPoly rhs_laplace_form(int g, int ell, HodgeCache &cache) {
  const std::size_t L = static_cast<std::size_t>(ell);
  MultiPoly rhs(L);

  if (ell >= 2) {
    const MultiPoly &lower = require(cache, g, ell - 1);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i + 1; j < L; ++j) {
        MultiPoly di = derivative(embed(lower, L, all_but(L, j)), i);
        MultiPoly dj = derivative(embed(lower, L, all_but(L, i)), j);
        MultiPoly numerator = power_factor(L, i, 2, 2) * di - power_factor(L, j, 2, 2) * dj;
        MultiPoly titj = shift(shift(MultiPoly::constant(L, Rational(1)), i), j);
        rhs += titj * divided_difference(numerator, i, j);
      }
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        if (i == j)
          continue;
        MultiPoly di = derivative(embed(lower, L, all_but(L, j)), i);
        rhs -= power_factor(L, i, 3, 1) * di;
      }
  }

  if (g >= 1) {
    const MultiPoly &higher = require(cache, g - 1, ell + 1);
    const std::size_t M = L + 1;
    MultiPoly weight = power_factor(M, 0, 2, 1) * power_factor(M, 1, 2, 1);
    MultiPoly mixed = weight * derivative(derivative(higher, 0), 1);
    MultiPoly sum(L);
    for (std::size_t i = 0; i < L; ++i)
      sum += diagonal(mixed, L, i);
    rhs += sum * Rational(1, 2);
  }

  MultiPoly products(L);
  for (std::size_t i = 0; i < L; ++i) {
    MultiPoly weight = power_factor(L, i, 2, 1);
    for (const auto &s : stable_splits(g, L, i)) {
      const MultiPoly &h1 = require(cache, s.g1, static_cast<int>(s.J.size()) + 1);
      const MultiPoly &h2 = require(cache, g - s.g1, static_cast<int>(s.K.size()) + 1);
      products += (weight * derivative(embed_with_head(h1, L, i, s.J), i)) *
                  (weight * derivative(embed_with_head(h2, L, i, s.K), i));
    }
  }
  rhs += products * Rational(1, 2);
  return rhs;
}

MultiPoly finish(HodgeKey key, const MultiPoly &rhs) {
  MultiPoly h = solve_lhs_operator(rhs, key.euler());
  const std::string where = "(" + std::to_string(key.g) + "," + std::to_string(key.ell) + ")";
  if (h.degree() != 3 * key.euler())
    throw NonPolynomialError("H" + where + " has degree " + std::to_string(h.degree()) +
                             ", expected " + std::to_string(3 * key.euler()));
  if (!is_symmetric(h))
    throw NonPolynomialError("H" + where + " is not symmetric");
  return h;
}

MultiPoly compute_with(HodgeKey key, HodgeCache &cache, RecursionForm form) {
  if (!key.stable())
    throw std::domain_error("compute_H: unstable key");
  if (is_seed(key))
    return seed_polynomial(key);
  MultiPoly rhs = form == RecursionForm::polynomial ? rhs_polynomial_form(key.g, key.ell, cache)
                                                    : rhs_laplace_form(key.g, key.ell, cache);
  return finish(key, rhs);
}

} // namespace

MultiPoly compute_H(int g, int ell, HodgeCache &cache) {
  return compute_with({g, ell}, cache, RecursionForm::polynomial);
}

MultiPoly compute_H_alt(int g, int ell, HodgeCache &cache) {
  return compute_with({g, ell}, cache, RecursionForm::laplace);
}

MultiPoly recursion_rhs(HodgeKey key, HodgeCache &cache) {
  if (!key.stable() || is_seed(key))
    throw std::domain_error("recursion_rhs: key has no recursion right-hand side");
  return cache.form() == RecursionForm::polynomial ? rhs_polynomial_form(key.g, key.ell, cache)
                                                   : rhs_laplace_form(key.g, key.ell, cache);
}

// HodgeCache

const MultiPoly *HodgeCache::find(HodgeKey key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void HodgeCache::insert(HodgeKey key, MultiPoly poly, bool computed) {
  std::lock_guard lock(mutex_);
  if (entries_.try_emplace(key, std::move(poly)).second && computed)
    ++computed_;
}

bool HodgeCache::contains(HodgeKey key) const { return find(key) != nullptr; }

const MultiPoly &HodgeCache::get(HodgeKey key) {
  if (const MultiPoly *p = find(key))
    return *p;
  MultiPoly poly = compute_with(key, *this, form_);
  insert(key, std::move(poly), !is_seed(key));
  return *find(key);
}

void HodgeCache::fill(int max_euler, unsigned threads) {
  const auto keys = stable_keys(max_euler);
  for (int chi = 1; chi <= max_euler; ++chi) {
    std::vector<HodgeKey> level;
    for (const auto &k : keys)
      if (k.euler() == chi && !contains(k))
        level.push_back(k);
    if (threads <= 1 || level.size() <= 1) {
      for (const auto &k : level)
        get(k);
      continue;
    }
    std::vector<std::jthread> pool;
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(level.size()));
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < level.size(); k += workers)
          get(level[k]);
      });
  }
}

std::size_t HodgeCache::recursion_count() const {
  std::lock_guard lock(mutex_);
  return computed_;
}

std::map<HodgeKey, MultiPoly> HodgeCache::snapshot() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

void HodgeCache::save(const std::filesystem::path &path) const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto &[key, poly] : snapshot()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto &[n, value] : to_xi_basis(poly).coefficients)
      coeffs.push_back({{"n", n}, {"value", value.to_string()}});
    entries.push_back({{"g", key.g}, {"ell", key.ell}, {"xi_coeffs", std::move(coeffs)}});
  }
  nlohmann::ordered_json doc = {{"version", 1}, {"entries", std::move(entries)}};
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write cache file " + path.string());
  out << doc.dump(1) << '\n';
}

void HodgeCache::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read cache file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("version").get<int>() != 1)
      throw std::runtime_error("unsupported cache version");
    for (const auto &entry : doc.at("entries")) {
      HodgeKey key{entry.at("g").get<int>(), entry.at("ell").get<int>()};
      if (!key.stable())
        throw std::runtime_error("unstable key in cache");
      XiExpansion x;
      x.arity = static_cast<std::size_t>(key.ell);
      for (const auto &c : entry.at("xi_coeffs"))
        x.coefficients[c.at("n").get<std::vector<unsigned>>()] =
            Rational::parse(c.at("value").get<std::string>());
      insert(key, from_xi_basis(x), false);
    }
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error("malformed cache file " + path.string() + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw std::runtime_error("malformed cache file " + path.string() + ": " + e.what());
  }
}

// HodgeTable

Rational HodgeTable::get(int g, std::vector<unsigned> n, int j) const {
  std::sort(n.begin(), n.end());
  auto it = entries_.find(Key{g, std::move(n), j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void HodgeTable::set(int g, std::vector<unsigned> n, int j, const Rational &value) {
  std::sort(n.begin(), n.end());
  if (value.is_zero())
    entries_.erase(Key{g, std::move(n), j});
  else
    entries_[Key{g, std::move(n), j}] = value;
}

Rational HodgeTable::lambda_dual(int g, const std::vector<unsigned> &n) const {
  const int ell = static_cast<int>(n.size());
  const int j = 3 * g - 3 + ell - static_cast<int>(std::accumulate(n.begin(), n.end(), 0u));
  if (j < 0 || j > g)
    return Rational(0);
  Rational v = get(g, n, j);
  return j % 2 == 0 ? v : -v;
}

void HodgeTable::merge(const HodgeTable &other) {
  for (const auto &[k, v] : other.entries_)
    entries_[k] = v;
  complete_.insert(other.complete_.begin(), other.complete_.end());
}

HodgeTable extract_hodge(int g, int ell, const MultiPoly &H) {
  if (static_cast<int>(H.arity()) != ell)
    throw std::invalid_argument("extract_hodge: arity does not match l");
  const XiExpansion x = to_xi_basis(H);
  HodgeTable table;
  const int dim = 3 * g - 3 + ell;
  for (const auto &[n, c] : x.coefficients) {
    const int j = dim - static_cast<int>(std::accumulate(n.begin(), n.end(), 0u));
    if (j < 0 || j > g)
      throw NonPolynomialError("extract_hodge: nonzero coefficient at j=" + std::to_string(j) +
                               " outside [0, " + std::to_string(g) + "]");
    std::vector<unsigned> sorted = n;
    std::sort(sorted.begin(), sorted.end());
    if (x.at(sorted) != c)
      throw NonPolynomialError("extract_hodge: xi-expansion is not permutation symmetric");
    table.set(g, sorted, j, j % 2 == 0 ? c : -c);
  }
  table.mark_complete({g, ell});
  return table;
}

HodgeTable build_hodge_table(HodgeCache &cache, const std::vector<HodgeKey> &keys) {
  HodgeTable table;
  for (const auto &key : keys)
    table.merge(extract_hodge(key.g, key.ell, cache.get(key)));
  return table;
}

HodgeTable build_hodge_table(HodgeCache &cache, int max_euler) {
  return build_hodge_table(cache, stable_keys(max_euler));
}

namespace {

void tuples_up_to(std::size_t ell, unsigned budget, std::vector<unsigned> &current,
                  std::vector<std::vector<unsigned>> &out) {
  if (current.size() == ell) {
    out.push_back(current);
    return;
  }
  for (unsigned k = 0; k <= budget; ++k) {
    current.push_back(k);
    tuples_up_to(ell, budget - k, current, out);
    current.pop_back();
  }
}

} // namespace

HurwitzValue elsv_evaluate(int g, const Partition &mu, const HodgeTable &table) {
  const int ell = static_cast<int>(mu.length());
  const int r = rh_count(g, mu);
  Rational prefactor = Rational(factorial(r)) / Rational(aut_order(mu));
  for (int part : mu.parts()) {
    BigInt pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), part, part);
    prefactor *= Rational(pp, factorial(part));
  }

  Rational integral;
  HodgeKey key{g, ell};
  if (!key.stable()) {
    if (g != 0)
      throw std::domain_error("elsv_evaluate: invalid key");
    integral = ell == 1 ? Rational(BigInt(1), BigInt(mu[0]) * mu[0])
                        : Rational(BigInt(1), BigInt(mu[0] + mu[1]));
  } else {
    if (!table.has_key(key))
      throw std::out_of_range("elsv_evaluate: Hodge table lacks (" + std::to_string(g) + "," +
                              std::to_string(ell) + ")");
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> current;
    tuples_up_to(mu.length(), static_cast<unsigned>(3 * g - 3 + ell), current, tuples);
    for (const auto &n : tuples) {
      Rational c = table.lambda_dual(g, n);
      if (c.is_zero())
        continue;
      for (std::size_t i = 0; i < n.size(); ++i)
        c *= pow(Rational(mu[i]), n[i]);
      integral += c;
    }
  }
  return {g, mu, prefactor * integral, Provenance::elsv};
}

} // namespace hodge
