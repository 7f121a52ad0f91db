#include "flexcat/number.hpp"

#include "flexcat/errors.hpp"

#include <algorithm>
#include <cctype>

namespace flexcat {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) throw Error(Errc::parse_error, "not an integer: " + quoted(text));
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !all_digits(den_text))
    throw Error(Errc::parse_error, "not a rational: " + quoted(text));
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::parse_error, "zero denominator: " + quoted(text));
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

Rational decimal_to_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  const auto int_part = body.substr(0, dot);
  const auto frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  const bool int_ok = int_part.empty() || all_digits(int_part);
  const bool frac_ok = dot == std::string_view::npos || all_digits(frac_part);
  if (!int_ok || !frac_ok || (int_part.empty() && frac_part.empty()))
    throw Error(Errc::parse_error, "not a decimal literal: " + quoted(text));

  std::string digits(int_part);
  digits += frac_part;
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational parse_rational_or_decimal(std::string_view text) {
  if (text.find('.') != std::string_view::npos) return decimal_to_rational(text);
  return parse_rational(text);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& value) {
  Rational r = value - Rational(floor(value));
  r.canonicalize();
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace flexcat
