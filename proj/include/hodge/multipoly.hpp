#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents &e);

/// Graded lexicographic order: higher total degree first, ties broken by
/// comparing exponents left to right. grlex_less(a, b) means a < b.
bool grlex_less(const Exponents &a, const Exponents &b);

struct GrlexLess {
  bool operator()(const Exponents &a, const Exponents &b) const { return grlex_less(a, b); }
};

/// Raised when a polynomial identity that must hold exactly does not: a
/// nonzero remainder in a divided difference, a residue outside the image
/// of a triangular solve, and the like.
class NonPolynomialError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial in t_1..t_arity over Rational. Zero coefficients are
/// never stored. Terms are kept in graded-lex order.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MultiPoly(std::size_t arity = 1);

  static MultiPoly constant(std::size_t arity, const Rational &c);
  /// t_i (0-based index).
  static MultiPoly variable(std::size_t arity, std::size_t i);
  static MultiPoly monomial(const Exponents &e, const Rational &c);

  std::size_t arity() const { return arity_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents &e) const;
  /// Accumulates c into the coefficient of t^e, pruning zeros.
  void add_term(const Exponents &e, const Rational &c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Graded-lex largest term. Throws on the zero polynomial.
  const std::pair<const Exponents, Rational> &leading_term() const;

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const Rational &c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
  friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) = default;

  /// Canonical text: graded-lex descending, "c*t1^a1*t2^a2" joined by
  /// " + ". Unit coefficients and unit exponents are elided; a single
  /// variable is printed as "t".
  std::string to_string() const;

private:
  void check_same_arity(const MultiPoly &o, const char *op) const;

  std::size_t arity_;
  TermMap terms_;
};

MultiPoly scale(const MultiPoly &p, const Rational &c);

/// d/dt_i.
MultiPoly derivative(const MultiPoly &p, std::size_t i);

/// t_i^2 (t_i - 1) d/dt_i.
MultiPoly apply_D(const MultiPoly &p, std::size_t i);

/// Multiplies by t_i^k.
MultiPoly shift(const MultiPoly &p, std::size_t i, unsigned k = 1);

/// Exact quotient p / (t_i - t_j). Throws NonPolynomialError when the
/// remainder p|_{t_i = t_j} is nonzero.
MultiPoly divided_difference(const MultiPoly &p, std::size_t i, std::size_t j);

/// Relabels variables: variable k of p becomes variable target[k] of a
/// polynomial of the given arity. Several variables may map to the same
/// target, in which case their exponents add (substitution u_1 = u_2 = t).
MultiPoly remap(const MultiPoly &p, std::size_t arity, std::span<const std::size_t> target);

Rational evaluate(const MultiPoly &p, std::span<const Rational> point);
double evaluate(const MultiPoly &p, std::span<const double> point);

/// True iff p is invariant under every permutation of its variables.
bool is_symmetric(const MultiPoly &p);

/// Monomials of degree exactly d.
MultiPoly homogeneous_part(const MultiPoly &p, unsigned d);

} // namespace hodge
