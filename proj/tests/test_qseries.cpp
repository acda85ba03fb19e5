#include "doctest.h"

#include "qmf/qexpansions.hpp"

using namespace qmf;

namespace {

QR mono(long num, long den, long c, long prec) {
  return QR::monomial(rat(c, 1), num, prec, den).with_denom(den);
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  long P = 20;
  QR one = QR::one(P);
  QR q = QR::monomial(Rational(1), 1, P);
  // (1 + q)(1 - q) = 1 - q^2
  QR prod = (one + q) * (one - q);
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  CHECK(prod.coeff(2) == -1);
  CHECK(prod.coeff(3) == 0);

  // invert(1 - q) = geometric series
  QR geo = (one - q).invert();
  for (long e = 0; e <= 3; ++e) CHECK(geo.coeff(e) == 1);

  // (q^{-1} + 1)^2 = q^{-2} + 2 q^{-1} + 1
  QR s = QR::monomial(Rational(1), -1, P) + one;
  QR sq = s.pow_int(2);
  CHECK(sq.coeff(-2) == 1);
  CHECK(sq.coeff(-1) == 2);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 0);
}

TEST_CASE("series multiplication properties on samples") {
  long P = 16;
  std::vector<QR> pool;
  pool.push_back(QR::one(P));
  {
    std::vector<Rational> c;
    for (long e = 0; e < P; ++e) c.push_back(rat((e * 7) % 5 - 2, 1 + (e % 3)));
    c[0] = 1;
    pool.push_back(QR::from_coeffs(c, -2));
    for (long e = 0; e < P; ++e) c[e] = rat((e * 3) % 7 - 3, 2);
    c[0] = rat(3, 2);
    pool.push_back(QR::from_coeffs(c, 0));
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(eq_to_prec(a * b, b * a));
      for (const auto& c : pool) CHECK(eq_to_prec((a * b) * c, a * (b * c)));
    }
  for (const auto& a : pool) {
    QR p = a * a.invert();
    CHECK(p.coeff(0) == 1);
    CHECK((p - QR::one(p.prec())).is_zero());
  }
}

TEST_CASE("theta operator") {
  long P = 12;
  QR f = QR::monomial(Rational(1), -3, P) + QR::monomial(Rational(5), 6, P);
  QR t = f.theta();
  CHECK(t.coeff(-3) == -3);
  CHECK(t.coeff(6) == 30);
  CHECK(QR::one(P).theta().is_zero());

  // derivation property on samples
  std::vector<Rational> ca, cb;
  for (long e = 0; e < P; ++e) {
    ca.push_back(rat(e % 4 + 1, 3));
    cb.push_back(rat((e * 5) % 7 - 2, 1));
  }
  cb[0] = 1;
  QR a = QR::from_coeffs(ca, 0), b = QR::from_coeffs(cb, -1);
  CHECK(eq_to_prec((a * b).theta(), a.theta() * b + a * b.theta()));
}

TEST_CASE("Eisenstein series") {
  QR e2 = eisenstein_series(2, 10);
  CHECK(e2.coeff(0) == 1);
  CHECK(e2.coeff(1) == -24);
  CHECK(e2.coeff(2) == -72);
  CHECK(e2.coeff(3) == -96);
  CHECK(e2.coeff(4) == -168);
  CHECK(eisenstein_series(4, 4).coeff(1) == 240);
  CHECK(eisenstein_series(6, 4).coeff(1) == -504);
  CHECK_THROWS(eisenstein_series(3, 4));
  CHECK_THROWS(eisenstein_series(0, 4));
}

TEST_CASE("Ramanujan differential system and Delta") {
  long P = 55;
  QR e2 = eisenstein_series(2, P);
  QR e4 = eisenstein_series(4, P);
  QR e6 = eisenstein_series(6, P);
  CHECK(eq_to_prec(e4.theta(), (e2 * e4 - e6).scaled_rat(rat(1, 3))));
  CHECK(eq_to_prec(e6.theta(), (e2 * e6 - e4 * e4).scaled_rat(rat(1, 2))));
  CHECK(eq_to_prec(e2.theta(), (e2 * e2 - e4).scaled_rat(rat(1, 12))));

  QR delta = delta_series(P);
  CHECK(eq_to_prec(delta, (e4 * e4 * e4 - e6 * e6).scaled_rat(rat(1, 1728))));
  // Theta(Delta) = E2 Delta
  CHECK(eq_to_prec(delta.theta(), e2 * delta));
}

TEST_CASE("rescale") {
  QR e2 = eisenstein_series(2, 6);
  QR r = e2.rescale(11);
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(11) == -24);
  for (long e = 1; e < 11; ++e) CHECK(r.coeff(e) == 0);
  QR d = e2 - r.truncated(6).scaled(Rational(11));
  CHECK(d.coeff(0) == -10);
  CHECK(mono(-1, 1, 1, 5).rescale(3).coeff(-3) == 1);
}

TEST_CASE("eta quotients") {
  long P = 40;
  EtaQuotient d11;
  d11.ex = {{1, 2}, {11, 2}};
  QR delta11 = eta_expand(d11, P);
  CHECK(delta11.denom() == 1);
  CHECK(delta11.low() == 1);
  std::vector<long> expect{1, -2, -1, 2, 1, 2, -2, 0, -2, -2};
  for (long n = 1; n <= 10; ++n) CHECK(delta11.coeff(n) == expect[n - 1]);

  EtaQuotient f27;
  f27.ex = {{3, 3}, {27, -3}};
  QR h = eta_expand(f27, P);
  CHECK(h.low() == -3);
  CHECK(h.coeff(-3) == 1);
  CHECK(h.coeff(0) == -3);
  QR f = h + QR::monomial(Rational(3), 0, h.prec());
  CHECK(f.coeff(0) == 0);
  CHECK(f.coeff(6) == 5);
  CHECK(f.coeff(15) == -7);
  CHECK(f.coeff(24) == 3);

  // eta(tau) alone lives in q^{1/24}
  EtaQuotient eta1;
  eta1.ex = {{1, 1}};
  QR e = eta_expand(eta1, 30);
  CHECK(e.denom() == 24);
  CHECK(e.low() == 1);  // q^{1/24}
}

TEST_CASE("generalized eta leading exponents") {
  EtaQuotient g;
  g.kind = EtaQuotient::Kind::Generalized;
  g.level = 31;
  g.ex = {{6, 1}};
  CHECK(eta_leading_exponent(g) == rat(61, 372));
  // folding: eta_{a+N} = -eta_a, eta_{N-a} = eta_a
  EtaQuotient g2 = g;
  g2.ex = {{25, 1}};  // 25 = 31 - 6
  CHECK(eta_leading_exponent(g2) == rat(61, 372));
  QR s6 = eta_expand(g, 40);
  QR s25 = eta_expand(g2, 40);
  CHECK(eq_to_prec(s6, s25));
  EtaQuotient g3 = g;
  g3.ex = {{37, 1}};  // 37 = 31 + 6
  QR s37 = eta_expand(g3, 40);
  CHECK(eq_to_prec(s37, -s6));
}

TEST_CASE("eta cusp orders") {
  EtaQuotient d11;
  d11.ex = {{1, 2}, {11, 2}};
  CHECK(eta_cusp_order(d11, 11, 1) == 1);   // cusp 0
  CHECK(eta_cusp_order(d11, 11, 11) == 1);  // infinity

  EtaQuotient f27;
  f27.ex = {{3, 3}, {27, -3}};
  CHECK(eta_cusp_order(f27, 27, 27) == -3);
  CHECK(eta_cusp_order(f27, 27, 1) == 1);
  CHECK(eta_cusp_order(f27, 27, 3) == 1);
  CHECK(eta_cusp_order(f27, 27, 9) == 0);

  EtaQuotient d1;
  d1.ex = {{1, 24}};
  CHECK(eta_cusp_order(d1, 1, 1) == 1);
}

TEST_CASE("character Eisenstein q-expansion") {
  auto chi = DirichletCharacter::primitive_characters(3)[0];
  QC e = char_eisenstein_q(chi, 12);
  CHECK(e.coeff(0).is_zero());
  CHECK(e.coeff(1) == Cyc(Rational(1)));
  CHECK(e.coeff(2) == Cyc(Rational(-3)));
  CHECK(e.coeff(3).is_zero());
  CHECK(e.coeff(4) == Cyc(Rational(7)));
}

TEST_CASE("series line serialization") {
  QR f = QR::monomial(rat(-3, 2), -1, 3) + QR::monomial(rat(5, 1), 1, 3);
  CHECK(f.to_lines() == "-1\t-3/2\n1\t5\n");
  EtaQuotient eta1;
  eta1.ex = {{1, 1}};
  QR e = eta_expand(eta1, 26);
  CHECK(e.to_lines().substr(0, 7) == "1/24\t1\n");
}
