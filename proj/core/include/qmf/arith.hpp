#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

using std::gcd;
using std::lcm;

std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);  // sorted ascending
long euler_phi(long n);
long sigma1(long n);
Integer sigma_pow(long n, int k);  // sigma_k(n) = sum of d^k over d|n

// Legendre symbol (a|p) for odd prime p.
int legendre(long a, long p);

// Smallest generator of (Z/p^k)* for odd prime power p^k (or 2, 4).
long primitive_root(long pk);

long pow_mod(long b, long e, long m);

// Bernoulli number B_k with the convention B_1 = -1/2 (only even k are
// needed by Eisenstein series; odd k > 1 give 0).
Rational bernoulli(unsigned k);

}  // namespace qmf
