#include "qmf/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmf {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n <= 0) throw std::domain_error("factorize expects n > 0");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = out.size();
    long pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

long sigma1(long n) {
  long s = 0;
  for (long d : divisors(n)) s += d;
  return s;
}

Integer sigma_pow(long n, int k) {
  Integer s = 0;
  for (long d : divisors(n)) {
    Integer dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k));
    s += dk;
  }
  return s;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = pow_mod(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

long primitive_root(long pk) {
  if (pk == 2) return 1;
  if (pk == 4) return 3;
  auto fac = factorize(pk);
  if (fac.size() != 1 || fac[0].first == 2)
    throw std::domain_error("primitive_root expects an odd prime power (or 2, 4)");
  long p = fac[0].first;
  long phi = euler_phi(pk);
  auto qs = factorize(phi);
  for (long g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [q, e] : qs) {
      (void)e;
      if (pow_mod(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

Rational bernoulli(unsigned k) {
  // B_0..B_k via sum_{j=0}^{m} C(m+1,j) B_j = 0.
  static std::vector<Rational> cache{Rational(1)};
  while (cache.size() <= k) {
    unsigned m = cache.size();
    Rational s(0);
    Integer binom(1);  // C(m+1, j) built incrementally
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) {
        binom *= (m + 2 - j);
        binom /= j;
      } else {
        binom = 1;
      }
      s += Rational(binom) * cache[j];
    }
    Rational bm = -s / Rational(m + 1);
    cache.push_back(bm);
  }
  return cache[k];
}

}  // namespace qmf
