#pragma once

#include <string>
#include <vector>

#include "qmf/cyclotomic.hpp"

namespace qmf {

// Dirichlet character modulo u, stored as an explicit value table:
// chi(a) = zeta_order^{expo[a]} on residues coprime to u, and 0 elsewhere.
// Built from CRT generators of (Z/uZ)*, so no discrete logs at use time.
class DirichletCharacter {
 public:
  long modulus() const { return u_; }
  long order() const { return order_; }
  long conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == u_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_odd() const;  // chi(-1) = -1

  // Value as an element of Q(zeta_order); zero on non-coprime residues.
  Cyc value(long a) const;
  // Exponent k with chi(a) = zeta_order^k, or -1 when chi(a) = 0.
  long value_exponent(long a) const;

  DirichletCharacter conjugate() const;

  // All characters mod u, deterministic order (lexicographic in the
  // exponent tuple on the CRT generators).
  static std::vector<DirichletCharacter> all_characters(long u);
  // Primitive characters of conductor u; includes the trivial character
  // only for u = 1.
  static std::vector<DirichletCharacter> primitive_characters(long u);

  std::string label() const;

 private:
  long u_ = 1;
  long order_ = 1;
  long conductor_ = 1;
  std::vector<long> expo_;  // size u_, -1 on non-coprime residues

  void finish();  // compute order_, conductor_ from expo_
  friend class CharacterBuilder;
};

// Gauss sum g(chi) = sum_a chi(a) e^{2 pi i a / u}; requires chi primitive.
// Satisfies g * conj(g) = u.
Cyc gauss_sum(const DirichletCharacter& chi);

// 1/(1 - cos(2 d pi / u)) = 2/((1-zeta_u^d)(1-zeta_u^{-d})) as an exact
// element of Q(zeta_u); requires u >= 3 and u not dividing d.
Cyc inv_one_minus_cos(long d, long u);

}  // namespace qmf
