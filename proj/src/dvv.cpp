#include "hodge/dvv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hodge {

namespace {

unsigned sum_of(const std::vector<unsigned> &n) { return std::accumulate(n.begin(), n.end(), 0u); }

Rational df(long n) { return Rational(double_factorial(n)); }

std::string tuple_string(const std::vector<unsigned> &n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i)
    s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

} // namespace

std::vector<std::vector<unsigned>> compositions(std::size_t ell, unsigned total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    if (current.size() + 1 == ell) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      current.push_back(k);
      rec(remaining - k);
      current.pop_back();
    }
  };
  if (ell == 0) {
    if (total == 0)
      out.emplace_back();
    return out;
  }
  rec(total);
  return out;
}

Rational PsiTable::operator()(int g, std::vector<unsigned> n) {
  const int ell = static_cast<int>(n.size());
  if (g < 0 || ell < 1 || 2 * g - 2 + ell <= 0)
    return Rational(0);
  if (static_cast<int>(sum_of(n)) != 3 * g - 3 + ell)
    return Rational(0);
  std::sort(n.begin(), n.end(), std::greater<>());
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(g, n);
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;
  Rational value = compute(g, n);
  memo_.emplace(std::move(key), value);
  return value;
}

// n sorted descending; n[0] plays the distinguished point.
Rational PsiTable::compute(int g, const std::vector<unsigned> &n) {
  const std::size_t ell = n.size();
  if (g == 0 && ell == 3)
    return Rational(1);
  if (g == 1 && ell == 1)
    return Rational(1, 24);

  const long n1 = n[0];
  const std::vector<unsigned> rest(n.begin() + 1, n.end());
  Rational total;

  for (std::size_t j = 0; j < rest.size(); ++j) {
    const long nj = rest[j];
    const long m = n1 + nj - 1;
    if (m < 0)
      continue;
    std::vector<unsigned> reduced{static_cast<unsigned>(m)};
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (k != j)
        reduced.push_back(rest[k]);
    Rational coeff = df(2 * n1 + 2 * nj - 1) / (df(2 * n1 + 1) * df(2 * nj - 1));
    total += coeff * (*this)(g, reduced);
  }

  Rational quadratic;
  for (long a = 0; a <= n1 - 2; ++a) {
    const long b = n1 - 2 - a;
    Rational weight = df(2 * a + 1) * df(2 * b + 1) / df(2 * n1 + 1);

    std::vector<unsigned> joined{static_cast<unsigned>(a), static_cast<unsigned>(b)};
    joined.insert(joined.end(), rest.begin(), rest.end());
    Rational bracket = (*this)(g - 1, joined);

    for (int g1 = 0; g1 <= g; ++g1)
      for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
        std::vector<unsigned> left{static_cast<unsigned>(a)}, right{static_cast<unsigned>(b)};
        for (std::size_t k = 0; k < rest.size(); ++k)
          ((mask >> k) & 1u ? left : right).push_back(rest[k]);
        // (*this) already returns zero for unstable halves.
        bracket += (*this)(g1, left) * (*this)(g - g1, right);
      }
    quadratic += weight * bracket;
  }
  total += quadratic / Rational(2);
  return total;
}

Rational psi_intersection(int g, const std::vector<unsigned> &n) {
  static PsiTable table;
  return table(g, n);
}

std::vector<Mismatch> check_top_degree(int g, int ell, const MultiPoly &H, PsiTable &psi) {
  std::vector<Mismatch> out;
  const int dim = 3 * g - 3 + ell;
  if (dim < 0)
    return out;
  const XiExpansion x = to_xi_basis(H);
  const MultiPoly lhs = apply_lhs_operator(H, 2 * g - 2 + ell);
  for (const auto &n : compositions(static_cast<std::size_t>(ell), static_cast<unsigned>(dim))) {
    const Rational expected = psi(g, n);
    const Rational coeff = x.at(n);
    if (coeff != expected)
      out.push_back({"xi-coefficient of H_{" + std::to_string(g) + "," + std::to_string(ell) +
                         "} at n=" + tuple_string(n),
                     expected, coeff});

    Exponents mono(n.size());
    Rational weight = expected * df(2 * static_cast<long>(n[0]) + 1);
    mono[0] = 2 * n[0] + 2;
    for (std::size_t k = 1; k < n.size(); ++k) {
      mono[k] = 2 * n[k] + 1;
      weight *= df(2 * static_cast<long>(n[k]) - 1);
    }
    if (lhs.coefficient(mono) != weight)
      out.push_back({"top-degree recursion coefficient at n=" + tuple_string(n), weight,
                     lhs.coefficient(mono)});
  }
  return out;
}

std::vector<Mismatch> check_lambda_g(int g, int ell, const HodgeTable &table, const BSeries &b) {
  std::vector<Mismatch> out;
  if (g < 1)
    throw std::domain_error("check_lambda_g: requires g >= 1");
  if (!table.has_key({g, ell}) || !table.has_key({g, 1}))
    throw std::out_of_range("check_lambda_g: Hodge table lacks (g,l) or (g,1)");
  if (static_cast<std::size_t>(g) >= b.size())
    throw std::out_of_range("check_lambda_g: b-series too short");

  const std::string key = "(" + std::to_string(g) + "," + std::to_string(ell) + ")";
  const Rational base = table.get(g, {static_cast<unsigned>(2 * g - 2)}, g);
  if (base != b[g])
    out.push_back({"<tau_{2g-2} lambda_g>_{g,1} vs b_g at g=" + std::to_string(g), b[g], base});

  const long degree = 2L * g - 3 + ell;
  for (const auto &n : compositions(static_cast<std::size_t>(ell), static_cast<unsigned>(degree))) {
    const Rational value = table.get(g, n, g);
    std::vector<long> parts(n.begin(), n.end());
    const Rational expected = Rational(multinomial(degree, parts)) * base;
    if (value != expected)
      out.push_back({"multinomial factorization " + key + " at n=" + tuple_string(n), expected,
                     value});

    if (ell >= 2) {
      if (!table.has_key({g, ell - 1}))
        throw std::out_of_range("check_lambda_g: Hodge table lacks (g,l-1)");
      Rational rhs;
      for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j) {
          if (n[i] + n[j] == 0)
            continue;
          std::vector<unsigned> reduced{n[i] + n[j] - 1};
          for (std::size_t k = 0; k < n.size(); ++k)
            if (k != i && k != j)
              reduced.push_back(n[k]);
          rhs += Rational(binomial(n[i] + n[j], n[i])) * table.get(g, reduced, g);
        }
      const Rational lhs = Rational(ell - 1) * value;
      if (lhs != rhs)
        out.push_back({"l-recursion " + key + " at n=" + tuple_string(n), rhs, lhs});
    }
  }
  return out;
}

} // namespace hodge
