#pragma once

#include <map>

#include "qmf/character.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
// k even and >= 2 (E_2 is the quasimodular one).
QR eisenstein_series(int k, long prec);

// Weight-2 Eisenstein series attached to a primitive nontrivial character:
// constant term 0, coefficient of q^n equal to sum_{d|n} d chi(n/d) conj(chi)(d).
QC char_eisenstein_q(const DirichletCharacter& chi, long prec);

// Eta quotients, classical (indexed by divisors d of the level, eta(d tau))
// or generalized in Yang's sense (indexed by residues a mod N).
struct EtaQuotient {
  enum class Kind { Classical, Generalized };
  Kind kind = Kind::Classical;
  long level = 1;
  std::map<long, int> ex;  // d -> r_d, or a -> r_a
};

QR eta_expand(const EtaQuotient& spec, long prec);

// Exact leading q-exponent: sum d r_d / 24, resp. sum r_a N B(a/N)/2 with
// B(x) = x^2 - x + 1/6.
Rational eta_leading_exponent(const EtaQuotient& spec);

// Order of a classical eta quotient at the cusp class with denominator v,
// in the local variable q^{1/width}; independent of the numerator.
Rational eta_cusp_order(const EtaQuotient& spec, long N, long v);

// Twice the weight (= sum of exponents for classical quotients).
long eta_weight_times2(const EtaQuotient& spec);

// prod_{n>=1} (1 - q^{step n}) to the given precision.
QR euler_product(long step, long prec);

QR delta_series(long prec);           // q prod (1-q^n)^24
QR j_series(long prec);               // E_4^3 / Delta

}  // namespace qmf
