#pragma once

#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Element of the cyclotomic field Q(zeta_n), stored as dense coordinates in
// the power basis 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic
// polynomial.  Values are immutable after construction; all arithmetic is
// exact.  Elements of different conductors combine by promotion into the
// compositum Q(zeta_lcm).
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rational(0)) {}
  explicit Cyc(const Rational& r) : n_(1), c_(1, r) {}
  explicit Cyc(long v) : n_(1), c_(1, Rational(v)) {}
  Cyc(long n, std::vector<Rational> coords);

  // zeta_n^k
  static Cyc zeta(long n, long k = 1);

  long conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;  // throws if not rational

  Cyc conj() const;             // zeta -> zeta^{-1}
  Cyc inv() const;              // throws on zero
  Cyc promote(long L) const;    // embed into Q(zeta_L), n | L

  Cyc operator-() const;
  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
  Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

  Cyc scaled(const Rational& r) const;

  // "[c0,c1,...]@n", or plain "p/q" when the element is rational.
  std::string to_string() const;

  // Numerical embedding using zeta_n = exp(2*pi*i/n); for cross-checks only.
  std::pair<double, double> to_complex() const;

 private:
  long n_;
  std::vector<Rational> c_;
};

// Cyclotomic polynomial Phi_n as integer coefficients, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

}  // namespace qmf
