#pragma once

#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Cusp class representative e/v on X_0(N): v | N, gcd(e,v) = 1.  Two
// representatives e/v, e'/v' name the same cusp iff v = v' and
// e == e' mod gcd(v, N/v).
struct Cusp {
  long e = 0;
  long v = 1;

  std::string str() const;  // "e/v", with 0/1 shown as "0" and v=N as "oo"
};

long cusp_width(long v, long N);  // N / gcd(v^2, N)

bool cusp_equal(const Cusp& a, const Cusp& b, long N);
bool cusp_is_infinity(const Cusp& c, long N);

// Canonical enumeration: v ascending over divisors of N, then e ascending;
// the infinity class (v = N) comes last.
std::vector<Cusp> cusps_of(long N);

struct LevelData {
  long N = 1;
  long index = 1;  // [Gamma(1) : Gamma_0(N)]
  long genus = 0;
  long nu2 = 0;
  long nu3 = 0;
  std::vector<Cusp> cusps;
  // The basis construction assumes infinity is not a Weierstrass point of
  // X_0(N); trivially true for genus <= 1 and witnessed for the shipped
  // higher-genus level by realizing pole orders g+1..2g+1.
  bool infinity_weierstrass_free = true;
};

LevelData level_data(long N);

// Gamma_0(M)-reduction of the cusp e/v of X_0(N) (Lemma-style: v' = gcd(v,M),
// numerator scaled by v/v', then adjusted to a coprime representative).
Cusp reduce_cusp(long e, long v, long M);

// Gamma_0(M)-equivalence of arbitrary fractions a/c, a2/c2 (c = 0 means oo).
bool equivalent_cusps_frac(long a, long c, long a2, long c2, long M);

// Canonical cusp class of the fraction a/c at level M.
Cusp canonical_cusp(long a, long c, long M);

}  // namespace qmf
