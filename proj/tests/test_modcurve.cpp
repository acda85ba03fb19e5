#include "doctest.h"

#include <random>

#include "qmf/arith.hpp"
#include "qmf/modcurve.hpp"

using namespace qmf;

TEST_CASE("level data small levels") {
  LevelData d11 = level_data(11);
  CHECK(d11.genus == 1);
  CHECK(d11.cusps.size() == 2);
  CHECK(d11.index == 12);
  CHECK(cusp_width(1, 11) == 11);   // cusp 0
  CHECK(cusp_width(11, 11) == 1);   // infinity

  LevelData d27 = level_data(27);
  CHECK(d27.genus == 1);
  CHECK(d27.nu2 == 0);
  CHECK(d27.nu3 == 0);
  REQUIRE(d27.cusps.size() == 6);
  // canonical order: 0, 1/3, 2/3, 1/9, 2/9, infinity
  CHECK(d27.cusps[0].v == 1);
  CHECK(d27.cusps[1].e == 1);
  CHECK(d27.cusps[1].v == 3);
  CHECK(d27.cusps[2].e == 2);
  CHECK(d27.cusps[3].v == 9);
  CHECK(d27.cusps[5].v == 27);
  CHECK(cusp_width(3, 27) == 3);
  CHECK(cusp_width(9, 27) == 1);
  CHECK(cusp_width(1, 27) == 27);

  LevelData d31 = level_data(31);
  CHECK(d31.genus == 2);
  CHECK(d31.cusps.size() == 2);
}

TEST_CASE("genus table N <= 50") {
  // classical table of g(X_0(N))
  const long genus[51] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0,   // 0..9
                          0, 1, 0, 0, 1, 1, 0, 1, 0, 1,   // 10..19
                          1, 1, 2, 2, 1, 0, 2, 1, 2, 2,   // 20..29
                          3, 2, 1, 3, 3, 3, 1, 2, 4, 3,   // 30..39
                          3, 3, 5, 3, 4, 3, 5, 4, 3, 1,   // 40..49
                          2};
  for (long N = 1; N <= 50; ++N) CHECK(level_data(N).genus == genus[N]);
}

TEST_CASE("width sum equals index") {
  for (long N = 1; N <= 200; ++N) {
    LevelData d = level_data(N);
    long s = 0;
    for (const Cusp& c : d.cusps) s += cusp_width(c.v, N);
    CHECK(s == d.index);
  }
}

TEST_CASE("cusp reduction examples") {
  Cusp a = reduce_cusp(1, 9, 9);
  CHECK(a.e == 1);
  CHECK(a.v == 9);
  Cusp b = reduce_cusp(2, 9, 9);
  CHECK(b.e == 2);
  CHECK(b.v == 9);
  CHECK(cusp_equal(a, b, 9));  // both are the infinity class of X_0(9)

  Cusp c = reduce_cusp(1, 9, 3);
  CHECK(c.v == 3);
  CHECK(cusp_equal(c, Cusp{1, 3}, 3));  // infinity class of X_0(3)
}

TEST_CASE("fraction equivalence and canonical classes") {
  // 1/9 is Gamma_0(9)-equivalent to infinity
  CHECK(equivalent_cusps_frac(1, 9, 1, 0, 9));
  CHECK(!equivalent_cusps_frac(1, 3, 1, 0, 9));
  CHECK(equivalent_cusps_frac(1, 3, 2, 3, 3));  // same class at level 3
  CHECK(!equivalent_cusps_frac(1, 3, 2, 3, 9));

  // reduce_cusp lands in the class of the original fraction
  std::mt19937 rng(7);
  for (long N : {12L, 27L, 36L, 31L}) {
    for (long M : divisors(N)) {
      for (const Cusp& s : cusps_of(N)) {
        Cusp r = reduce_cusp(s.e, s.v, M);
        CHECK(equivalent_cusps_frac(s.e, s.v, r.e, r.v, M));
        Cusp r2 = reduce_cusp(r.e, r.v, M);
        CHECK(cusp_equal(r, r2, M));  // idempotent on classes
      }
    }
  }

  // random unimodular translates stay in the same class
  for (int iter = 0; iter < 200; ++iter) {
    long M = 1 + static_cast<long>(rng() % 40);
    auto cs = cusps_of(M);
    const Cusp& s = cs[rng() % cs.size()];
    // gamma = [[a,b],[c,d]] in Gamma_0(M)
    long c = M * static_cast<long>(1 + rng() % 3);
    long d = 1 + static_cast<long>(rng() % 5);
    while (gcd(c, d) != 1) ++d;
    // solve a d - b c = 1
    long a = 1, b = 0;
    for (long bb = -6; bb <= 6; ++bb) {
      if ((1 + bb * c) % d == 0) {
        b = bb;
        a = (1 + bb * c) / d;
        break;
      }
    }
    if (a * d - b * c != 1) continue;
    long num = a * s.e + b * s.v;
    long den = c * s.e + d * s.v;
    Cusp back = canonical_cusp(num, den, M);
    CHECK(cusp_equal(back, s, M));
  }
}
