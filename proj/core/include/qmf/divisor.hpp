#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmf/basis.hpp"
#include "qmf/eis_space.hpp"

namespace qmf {

// A meromorphic modular form given by its expansion at infinity, with
// leading coefficient exactly 1, plus its orders at the finite cusps
// (in the local variable q^{1/width}, aligned with cusps_of(N) minus the
// final infinity entry).
struct FormInput {
  QR series;
  int k = 0;
  long N = 1;
  std::vector<Rational> cusp_orders;
  std::string name;

  long h() const { return series.low(); }  // order at infinity
};

// Exponents c(1..count) of the product expansion
// f = q^h prod (1-q^n)^{c(n)}, via the coefficient recursion applied to
// q^{-h} f.  Requires a monic leading coefficient.
std::vector<Rational> product_exponents(const QR& f, long count);

// Expansion of the Serre-derivative quotient d_k(f)/f at infinity:
// h - k/12 + sum_n (-sum_{d|n} c(d) d + 2k sigma_1(n)) q^n.
QR serre_quotient(const FormInput& f, long prec);

struct DivisorReport {
  long N = 1;
  int k = 0;
  long h = 0;
  long genus = 0;
  std::vector<Rational> c;  // c(1..n_max)
  QR ftheta;
  EfSolution ef;
  std::map<long, Cyc> sums;  // n -> sum over the divisor of f_{N,n}(z)
  Cyc L1;                    // weighted point count sum e_{N,z} ord_z(f)
};

// Evaluate the divisor-sum formula for n = g+1 .. n_max.
DivisorReport divisor_sums(const FormInput& f, const BasisFamily& fam, long n_max);

// For f with divisor supported only at cusps, the series
// -d_k(f)/f + E_f + sum_l (correction_l) g_{N,-l} must vanish identically.
QC gtfne_residual(const FormInput& f, const BasisFamily& fam, long prec);

}  // namespace qmf
