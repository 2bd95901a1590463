#pragma once

// Exact rational scalars. Every sign test and equality in the library goes
// through this type; there is no floating point anywhere in the core.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coxconv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num);
  q /= den;
  return q;
}

/// Canonical "p/q" text, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q", "-p/q" (decimal digits only, q > 0 after sign).
/// The value is canonicalized, so "2/4" reads as 1/2.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  if (!text.empty() && text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Nearest integer; halves round toward +infinity.
inline Integer round_of(const Rational& q) { return floor_of(q + Rational(1, 2)); }

inline std::size_t hash_integer(const Integer& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p) + 2);
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i)
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  return h;
}

/// Hash on the normalized (numerator, denominator) pair.
inline std::size_t hash_rational(const Rational& q) {
  std::size_t h = hash_integer(q.get_num());
  return h ^ (hash_integer(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace coxconv
