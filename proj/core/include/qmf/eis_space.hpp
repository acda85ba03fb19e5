#pragma once

#include <string>
#include <vector>

#include "qmf/character.hpp"
#include "qmf/modcurve.hpp"
#include "qmf/qexpansions.hpp"

namespace qmf {

// Basis element of the weight-2 Eisenstein space E_2(N):
// either E_2(tau) - d E_2(d tau) for d | N, d != 1, or E_2^{phi,conj phi}(t tau)
// for t u^2 | N (u = conductor of phi > 2, phi primitive nontrivial).
struct EisElement {
  enum class Kind { E2Diff, CharEis };
  Kind kind = Kind::E2Diff;
  long d = 1;
  DirichletCharacter chi;
  long t = 1;

  std::string label() const;
};

// Deterministic order: E2Diff by d ascending, then CharEis by (u, t, index).
// The list always has (#cusps - 1) entries.
std::vector<EisElement> eis_basis(long N);

// Constant term of E_2 - d E_2(d .) at any cusp with denominator v.
Rational e2diff_const(long d, long v);

// Constant term of E_2^{phi, conj phi}(t tau) at the cusp e/v of X_0(N).
Cyc char_eis_const(const DirichletCharacter& chi, long t, const Cusp& c, long N);

Cyc eis_const(const EisElement& el, const Cusp& c, long N);

QC eis_expansion(const EisElement& el, long prec);

struct EfSolution {
  long N = 1;
  std::vector<EisElement> basis;
  std::vector<Cyc> alphas;
  QC Ef;

  Cyc eps(long n) const;  // Fourier coefficient eps_f(n) of E_f
};

// Solve alpha_1 E^(1)(s_i) + ... = c_i over the cusps s_i != infinity,
// where c_i = ord_i / width_i - k/12 from the supplied cusp orders
// (aligned with cusps_of(N) minus the final infinity entry).
EfSolution solve_Ef(long N, int k, const std::vector<Rational>& cusp_orders,
                    long prec);

// Same solve with an explicit right-hand side (one value per finite cusp).
EfSolution solve_Ef_rhs(long N, const std::vector<Cyc>& rhs, long prec);

}  // namespace qmf
