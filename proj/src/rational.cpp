#include "hodge/rational.hpp"

#include <cctype>
#include <ostream>

namespace hodge {

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  r.value_ = std::move(value);
  return r;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view text, bool allow_sign, BigInt &out) {
  if (text.empty())
    return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+'))
    start = 1;
  if (start == text.size())
    return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      return false;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  BigInt num, den(1);
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
              ? parse_integer(text, true, num)
              : parse_integer(text.substr(0, slash), true, num) &&
                  parse_integer(text.substr(slash + 1), false, den);
  if (!ok)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.to_string();
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational &base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

} // namespace hodge
