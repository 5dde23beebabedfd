#pragma once

// Exact scalars. Everything in the library is exact; there is no floating
// point anywhere on the computational path.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symquot {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(unsigned long n, unsigned long k);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace symquot
