#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bilat {

// Exact rational scalar for interval endpoints. Always canonical (lowest
// terms, positive denominator), so operator== is value equality.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "3", "0.25", ".5", "7/10". Decimal literals become exact
// rationals (0.3 -> 3/10), never binary floats.
std::optional<Rational> parse_rational(std::string_view text);

// Terminating decimal when the denominator is 2^a*5^b (integers print bare:
// "0", "1", "0.3", "0.75"), otherwise "p/q" in lowest terms.
std::string rational_to_string(const Rational& r);

}  // namespace bilat
