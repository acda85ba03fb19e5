#include "qmf/modcurve.hpp"

#include <sstream>
#include <stdexcept>

#include "qmf/arith.hpp"

namespace qmf {

std::string Cusp::str() const {
  if (v == 1 && e == 0) return "0";
  std::ostringstream os;
  os << e << "/" << v;
  return os.str();
}

long cusp_width(long v, long N) {
  if (N % v != 0) throw std::domain_error("cusp_width: v must divide N");
  return N / gcd(v * v, N);
}

bool cusp_equal(const Cusp& a, const Cusp& b, long N) {
  if (a.v != b.v) return false;
  long g = gcd(a.v, N / a.v);
  return ((a.e - b.e) % g + g) % g == 0;
}

bool cusp_is_infinity(const Cusp& c, long N) { return c.v == N; }

std::vector<Cusp> cusps_of(long N) {
  std::vector<Cusp> out;
  for (long v : divisors(N)) {
    long g = gcd(v, N / v);
    for (long cls = 0; cls < g; ++cls) {
      long e = cls;
      while (gcd(e, v) != 1) e += g;
      if (v == 1) e = 0;
      out.push_back({e, v});
    }
  }
  return out;
}

LevelData level_data(long N) {
  if (N < 1) throw std::domain_error("level must be >= 1");
  LevelData ld;
  ld.N = N;
  ld.index = N;
  for (auto [p, e] : factorize(N)) {
    (void)e;
    ld.index = ld.index / p * (p + 1);
  }
  if (N == 1) ld.index = 1;

  // elliptic point counts
  ld.nu2 = 1;
  ld.nu3 = 1;
  if (N % 4 == 0) {
    ld.nu2 = 0;
  } else {
    for (auto [p, e] : factorize(N)) {
      (void)e;
      if (p == 2) continue;
      ld.nu2 *= (p % 4 == 1) ? 2 : 0;
      if (!ld.nu2) break;
    }
  }
  if (N % 9 == 0) {
    ld.nu3 = 0;
  } else {
    for (auto [p, e] : factorize(N)) {
      (void)e;
      if (p == 3) continue;
      ld.nu3 *= (p % 3 == 1) ? 2 : 0;
      if (!ld.nu3) break;
    }
  }

  ld.cusps = cusps_of(N);
  // g = 1 + mu/12 - nu2/4 - nu3/3 - cusps/2
  Rational g = Rational(1) + Rational(ld.index, 12) - Rational(ld.nu2, 4) -
               Rational(ld.nu3, 3) - Rational(static_cast<long>(ld.cusps.size()), 2);
  if (!is_integer(g) || g < 0) throw std::logic_error("genus formula inconsistency");
  ld.genus = to_long(g);
  return ld;
}

Cusp reduce_cusp(long e, long v, long M) {
  if (gcd(e, v) != 1 && !(e == 0 && v == 1))
    throw std::domain_error("reduce_cusp: gcd(e,v) must be 1");
  long vp = gcd(v, M);
  long m = v / vp;
  long g = gcd(vp, M / vp);
  long ep = ((m * e) % vp + vp) % vp;
  if (vp == 1) return {0, 1};
  // move inside the class to a representative coprime to v'
  long guard = 0;
  while (gcd(ep, vp) != 1) {
    ep += g;
    if (++guard > vp + 2) throw std::logic_error("reduce_cusp: no coprime representative");
  }
  return {ep, vp};
}

bool equivalent_cusps_frac(long a, long c, long a2, long c2, long M) {
  auto normalize = [](long& x, long& y) {
    if (y == 0) {
      x = 1;
      return;
    }
    long g = gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    if (g) {
      x /= g;
      y /= g;
    }
    if (y < 0) {
      x = -x;
      y = -y;
    }
  };
  normalize(a, c);
  normalize(a2, c2);
  // d = a^{-1} mod c completes (a, c) to an SL2 matrix [[a,b],[c,d]].
  auto inv_mod = [](long x, long m) {
    if (m == 0) return 1L;
    long t = 0, nt = 1, r = m, nr = ((x % m) + m) % m;
    while (nr != 0) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::logic_error("inv_mod: not invertible");
    return ((t % m) + m) % m;
  };
  long d = inv_mod(a, c);
  long d2 = inv_mod(a2, c2);
  long lhs = c2 * d - c * d2;
  long mod = gcd(c * c2, M);  // gcd(0, M) = M covers the infinity cases
  return lhs % mod == 0;
}

Cusp canonical_cusp(long a, long c, long M) {
  for (const Cusp& s : cusps_of(M)) {
    if (equivalent_cusps_frac(a, c, s.e, s.v, M)) return s;
  }
  throw std::logic_error("canonical_cusp: no class matched");
}

}  // namespace qmf
