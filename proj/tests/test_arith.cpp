#include "doctest.h"

#include "qmf/arith.hpp"
#include "qmf/character.hpp"
#include "qmf/cyclotomic.hpp"

using namespace qmf;

TEST_CASE("integer utilities") {
  CHECK(divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
  CHECK(euler_phi(27) == 18);
  CHECK(sigma1(6) == 12);
  CHECK(sigma_pow(4, 3) == 73);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(4) == rat(-1, 30));
  CHECK(bernoulli(6) == rat(1, 42));
  CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("cyclotomic basics") {
  Cyc z3 = Cyc::zeta(3);
  CHECK((z3 * z3 * z3) == Cyc(Rational(1)));
  CHECK((z3 * Cyc::zeta(3, 2)) == Cyc(Rational(1)));
  CHECK(z3.conj() == Cyc::zeta(3, 2));
  CHECK(Cyc::zeta(5).conj() == Cyc::zeta(5, 4));

  // inv(1 + zeta_4) = (1 - zeta_4)/2
  Cyc x = Cyc(Rational(1)) + Cyc::zeta(4);
  Cyc expected = (Cyc(Rational(1)) - Cyc::zeta(4)).scaled(rat(1, 2));
  CHECK(x.inv() == expected);
  CHECK((x * x.inv()) == Cyc(Rational(1)));
}

TEST_CASE("cyclotomic field axioms on samples") {
  std::vector<Cyc> pool;
  for (long k = 0; k < 6; ++k)
    pool.push_back(Cyc::zeta(12, k) + Cyc(Rational(k)).scaled(rat(1, 3)));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK((a * b) == (b * a));
      for (const auto& c : pool) {
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
      }
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("promotion commutes with arithmetic") {
  Cyc a = Cyc::zeta(3) + Cyc(Rational(2));
  Cyc b = Cyc::zeta(3, 2).scaled(rat(5, 7));
  CHECK((a * b).promote(12) == (a.promote(12) * b.promote(12)));
  CHECK((a + b).promote(12) == (a.promote(12) + b.promote(12)));
}

TEST_CASE("gauss sums") {
  auto chi3 = DirichletCharacter::primitive_characters(3);
  REQUIRE(chi3.size() == 1);
  Cyc g3 = gauss_sum(chi3[0]);
  CHECK(g3 == (Cyc::zeta(3) - Cyc::zeta(3, 2)));

  auto chi4 = DirichletCharacter::primitive_characters(4);
  REQUIRE(chi4.size() == 1);
  Cyc g4 = gauss_sum(chi4[0]);
  CHECK(g4 == Cyc::zeta(4).scaled(Rational(2)));

  for (long u = 3; u <= 24; ++u) {
    for (const auto& chi : DirichletCharacter::primitive_characters(u)) {
      Cyc g = gauss_sum(chi);
      CHECK(g * g.conj() == Cyc(Rational(u)));
    }
  }
}

TEST_CASE("primitive character counts") {
  CHECK(DirichletCharacter::primitive_characters(1).size() == 1);
  CHECK(DirichletCharacter::primitive_characters(2).empty());
  CHECK(DirichletCharacter::primitive_characters(3).size() == 1);
  CHECK(DirichletCharacter::primitive_characters(4).size() == 1);
  CHECK(DirichletCharacter::primitive_characters(5).size() == 3);
  CHECK(DirichletCharacter::primitive_characters(8).size() == 2);
  CHECK(DirichletCharacter::primitive_characters(9).size() == 4);
}

TEST_CASE("inv_one_minus_cos") {
  CHECK(inv_one_minus_cos(1, 3) == Cyc(rat(2, 3)));
  CHECK(inv_one_minus_cos(1, 4) == Cyc(Rational(1)));
  CHECK(inv_one_minus_cos(2, 3) == inv_one_minus_cos(1, 3));
  for (long u = 3; u <= 12; ++u)
    for (long d = 1; d < u; ++d) {
      Cyc v = inv_one_minus_cos(d, u);
      CHECK(v == v.conj());
      CHECK(v == inv_one_minus_cos(u - d, u));
    }
  CHECK_THROWS(inv_one_minus_cos(3, 3));
}
