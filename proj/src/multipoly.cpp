#include "hodge/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace hodge {

unsigned total_degree(const Exponents &e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool grlex_less(const Exponents &a, const Exponents &b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational &c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t i) {
  if (i >= arity)
    throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(arity, 0);
  e[i] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents &e, const Rational &c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents &e, const Rational &c) {
  if (e.size() != arity_)
    throw std::invalid_argument("MultiPoly: exponent vector length does not match arity");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
}

const std::pair<const Exponents, Rational> &MultiPoly::leading_term() const {
  if (terms_.empty())
    throw std::logic_error("MultiPoly::leading_term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::check_same_arity(const MultiPoly &o, const char *op) const {
  if (arity_ != o.arity_)
    throw std::invalid_argument(std::string("MultiPoly ") + op + ": arity mismatch (" +
                                std::to_string(arity_) + " vs " + std::to_string(o.arity_) + ")");
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  check_same_arity(o, "add");
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  check_same_arity(o, "sub");
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, coeff] : terms_)
    coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  a.check_same_arity(b, "mul");
  MultiPoly out(a.arity_);
  Exponents e(a.arity_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    if (!first)
      os << " + ";
    first = false;

    std::string vars;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0)
        continue;
      if (!vars.empty())
        vars += '*';
      vars += arity_ == 1 ? std::string("t") : "t" + std::to_string(k + 1);
      if (e[k] > 1)
        vars += '^' + std::to_string(e[k]);
    }
    if (vars.empty())
      os << c;
    else if (c == Rational(1))
      os << vars;
    else if (c == Rational(-1))
      os << '-' << vars;
    else
      os << c << '*' << vars;
  }
  return os.str();
}

MultiPoly scale(const MultiPoly &p, const Rational &c) { return p * c; }

MultiPoly derivative(const MultiPoly &p, std::size_t i) {
  if (i >= p.arity())
    throw std::out_of_range("derivative: variable index out of range");
  MultiPoly out(p.arity());
  for (const auto &[e, c] : p.terms()) {
    if (e[i] == 0)
      continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * Rational(static_cast<long>(e[i])));
  }
  return out;
}

MultiPoly apply_D(const MultiPoly &p, std::size_t i) {
  if (i >= p.arity())
    throw std::out_of_range("apply_D: variable index out of range");
  // t^2 (t - 1) d/dt sends e*t^e to e*t^{e+2} - e*t^{e+1}.
  MultiPoly out(p.arity());
  for (const auto &[e, c] : p.terms()) {
    if (e[i] == 0)
      continue;
    Rational k = c * Rational(static_cast<long>(e[i]));
    Exponents f = e;
    f[i] += 2;
    out.add_term(f, k);
    --f[i];
    out.add_term(f, -k);
  }
  return out;
}

MultiPoly shift(const MultiPoly &p, std::size_t i, unsigned k) {
  if (i >= p.arity())
    throw std::out_of_range("shift: variable index out of range");
  MultiPoly out(p.arity());
  for (const auto &[e, c] : p.terms()) {
    Exponents f = e;
    f[i] += k;
    out.add_term(f, c);
  }
  return out;
}

MultiPoly divided_difference(const MultiPoly &p, std::size_t i, std::size_t j) {
  if (i >= p.arity() || j >= p.arity())
    throw std::out_of_range("divided_difference: variable index out of range");
  if (i == j)
    throw std::invalid_argument("divided_difference: indices must differ");

  // p - p|_{t_i -> t_j} = sum c t^e' (t_i^a - t_j^a), and
  // (t_i^a - t_j^a)/(t_i - t_j) = sum_{k<a} t_i^k t_j^{a-1-k}.
  MultiPoly remainder(p.arity());
  MultiPoly quotient(p.arity());
  for (const auto &[e, c] : p.terms()) {
    Exponents base = e;
    unsigned a = base[i];
    base[i] = 0;
    Exponents r = base;
    r[j] += a;
    remainder.add_term(r, c);
    for (unsigned k = 0; k < a; ++k) {
      Exponents q = base;
      q[i] = k;
      q[j] += a - 1 - k;
      quotient.add_term(q, c);
    }
  }
  if (!remainder.is_zero())
    throw NonPolynomialError("divided_difference: polynomial is not divisible by (t" +
                             std::to_string(i + 1) + " - t" + std::to_string(j + 1) + ")");
  return quotient;
}

MultiPoly remap(const MultiPoly &p, std::size_t arity, std::span<const std::size_t> target) {
  if (target.size() != p.arity())
    throw std::invalid_argument("remap: target map length must equal source arity");
  for (std::size_t t : target)
    if (t >= arity)
      throw std::out_of_range("remap: target index out of range");
  MultiPoly out(arity);
  for (const auto &[e, c] : p.terms()) {
    Exponents f(arity, 0);
    for (std::size_t k = 0; k < e.size(); ++k)
      f[target[k]] += e[k];
    out.add_term(f, c);
  }
  return out;
}

namespace {

template <typename T, typename Pow>
T evaluate_impl(const MultiPoly &p, std::span<const T> point, Pow power) {
  if (point.size() != p.arity())
    throw std::invalid_argument("evaluate: point length does not match arity");
  // Cache powers per variable; degrees stay small.
  std::vector<std::vector<T>> powers(p.arity());
  auto pw = [&](std::size_t k, unsigned n) -> const T & {
    auto &cache = powers[k];
    if (cache.empty())
      cache.push_back(T(1));
    while (cache.size() <= n)
      cache.push_back(power(cache.back(), point[k]));
    return cache[n];
  };
  T acc(0);
  for (const auto &[e, c] : p.terms()) {
    T term = T(1);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0)
        term = term * pw(k, e[k]);
    if constexpr (std::is_same_v<T, double>)
      acc += c.to_double() * term;
    else
      acc += c * term;
  }
  return acc;
}

} // namespace

Rational evaluate(const MultiPoly &p, std::span<const Rational> point) {
  return evaluate_impl<Rational>(p, point, [](const Rational &a, const Rational &b) { return a * b; });
}

double evaluate(const MultiPoly &p, std::span<const double> point) {
  return evaluate_impl<double>(p, point, [](double a, double b) { return a * b; });
}

bool is_symmetric(const MultiPoly &p) {
  std::vector<std::size_t> target(p.arity());
  for (std::size_t k = 0; k + 1 < p.arity(); ++k) {
    std::iota(target.begin(), target.end(), std::size_t{0});
    std::swap(target[k], target[k + 1]);
    if (remap(p, p.arity(), target) != p)
      return false;
  }
  return true;
}

MultiPoly homogeneous_part(const MultiPoly &p, unsigned d) {
  MultiPoly out(p.arity());
  for (const auto &[e, c] : p.terms())
    if (total_degree(e) == d)
      out.add_term(e, c);
  return out;
}

} // namespace hodge
