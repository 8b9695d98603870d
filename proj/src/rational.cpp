#include "bilat/rational.hpp"

#include <cctype>

namespace bilat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string_view::npos)
      return std::nullopt;
    value = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole)))
      return std::nullopt;
    mpz_class num(std::string(whole.empty() ? "0" : whole), 10);
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    num = num * scale + mpz_class(std::string(frac), 10);
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rational_to_string(const Rational& r) {
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (den == 1) return num.get_str();

  // Strip factors of 2 and 5; denominator must reduce to 1 for a
  // terminating decimal.
  mpz_class rest = den;
  unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  unsigned long digits = twos > fives ? twos : fives;
  mpz_class scale = 1;
  for (unsigned long i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = num * (scale / den);  // exact: den | 10^digits

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (negative ? "-" : "") + s;
}

}  // namespace bilat
