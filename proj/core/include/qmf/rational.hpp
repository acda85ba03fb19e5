#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmf {

// Exact rational coefficients.  mpq_class keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rational& r) {
  return is_integer(r) && r >= 0;
}

inline long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("rational does not fit a machine integer");
  return r.get_num().get_si();
}

// "p/q" with the "/q" omitted for integers; this is the wire format used
// everywhere (series files, JSON reports, config files).
inline std::string rat_str(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    return Rational(1) / rat_pow(base, -e);
  }
  Rational acc(1), b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace qmf
