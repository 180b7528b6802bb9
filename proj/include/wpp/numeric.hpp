#pragma once

// Exact number types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wpp {

using Int = mpz_class;
using Rational = mpq_class;

/// Converts to a machine integer, throwing std::overflow_error if it does not fit.
std::int64_t to_i64(const Int& v);

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Floor division and non-negative remainder for a positive modulus.
Int floor_div(const Int& a, const Int& b);
Int mod_pos(const Int& a, const Int& m);

/// Serializes as "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& r);
std::string to_string(const Int& v);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace wpp
