#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbimirror {

/// Exact rational number. GMP keeps every value canonical (q > 0, gcd = 1).
using Rational = mpq_class;

/// Raised when two exact computations that must agree do not. Indicates a bug,
/// never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline mpz_class floor_of(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline mpz_class ceil_of(const Rational& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

/// Fractional part in [0, 1).
inline Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

/// Non-negative residue of an integer-valued rational modulo m.
inline std::int64_t mod_of(const Rational& r, std::int64_t m) {
  if (!is_integer(r)) throw ConsistencyError("mod_of: value " + to_string(r) + " is not an integer");
  mpz_class out;
  mpz_fdiv_r(out.get_mpz_t(), r.get_num_mpz_t(), mpz_class(static_cast<long>(m)).get_mpz_t());
  return out.get_si();
}

/// base^exp for a (possibly negative) integer exponent.
inline Rational power(std::int64_t base, std::int64_t exp) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(base)).get_mpz_t(),
             static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace orbimirror
