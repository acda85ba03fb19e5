#pragma once

#include <string>
#include <vector>

#include "qmf/divisor.hpp"

namespace qmf {

// Exact polynomial, coefficients ascending by degree.
struct ExactPoly {
  std::vector<Cyc> coef;

  long degree() const { return static_cast<long>(coef.size()) - 1; }
  Cyc eval(const Cyc& x) const;
  bool all_rational() const;
  std::string str() const;  // "[c0, c1, ...]", lowest degree first
};

// The linear functional f |-> sum_z e_{N,z} ord_z(f) f(z) realized through
// basis expansion: L(f) = sum_m c_m sums(m) + c_0 L1.
struct DivisorFunctional {
  const DivisorReport* report = nullptr;
  const BasisFamily* fam = nullptr;
};

Cyc functional_apply(const DivisorFunctional& L, const QR& f);

// p_r = L(f_{N,m0}^r) for r = 1..r_max.
std::vector<Cyc> power_sums(const DivisorFunctional& L, long m0, long r_max);

// Number of divisor points from L1, which must be a nonnegative integer
// (elliptic-point-weighted divisors need an explicit override instead).
long divisor_point_count(const DivisorReport& rep);

// Monic polynomial of degree ell with the given power sums of its roots.
ExactPoly newton_minpoly(const std::vector<Cyc>& p, long ell);

// Power sums of an explicit root multiset (test oracle for the round trip).
std::vector<Cyc> power_sums_of_roots(const std::vector<Rational>& roots, long r_max);
ExactPoly poly_from_roots(const std::vector<Rational>& roots);

}  // namespace qmf
