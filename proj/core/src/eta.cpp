#include "qmf/qexpansions.hpp"

#include <stdexcept>

namespace qmf {

QR eisenstein_series(int k, long prec) {
  if (k < 2 || k % 2 != 0)
    throw std::domain_error("eisenstein_series requires even k >= 2");
  Rational factor = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
  std::vector<Rational> c(prec, Rational(0));
  c[0] = 1;
  for (long n = 1; n < prec; ++n) c[n] = factor * Rational(sigma_pow(n, k - 1));
  return QR::from_coeffs(std::move(c), 0);
}

QC char_eisenstein_q(const DirichletCharacter& chi, long prec) {
  if (!chi.is_primitive() || chi.is_trivial())
    throw std::domain_error("char_eisenstein_q requires a primitive nontrivial character");
  DirichletCharacter bar = chi.conjugate();
  std::vector<Cyc> c(prec, Cyc(Rational(0)));
  for (long n = 1; n < prec; ++n) {
    Cyc s(Rational(0));
    for (long d : divisors(n)) {
      Cyc term = chi.value(n / d) * bar.value(d);
      if (term.is_zero()) continue;
      s += term.scaled(Rational(d));
    }
    c[n] = s;
  }
  return QC::from_coeffs(std::move(c), 0);
}

QR euler_product(long step, long prec) {
  std::vector<Rational> c(prec, Rational(0));
  c[0] = 1;
  // multiply in-place by (1 - q^m), descending so each source is untouched
  for (long m = step; m < prec; m += step)
    for (long e = prec - 1; e >= m; --e)
      if (c[e - m] != 0) c[e] -= c[e - m];
  return QR::from_coeffs(std::move(c), 0);
}

// Generalized eta product part: prod_m (1-q^{(m-1)N+a})(1-q^{mN-a}).
static QR generalized_eta_product(long N, long a, long prec) {
  std::vector<Rational> c(prec, Rational(0));
  c[0] = 1;
  auto mul_binomial = [&](long m) {
    for (long e = prec - 1; e >= m; --e)
      if (c[e - m] != 0) c[e] -= c[e - m];
  };
  for (long m = a; m < prec; m += N) mul_binomial(m);
  for (long m = N - a; m < prec; m += N) mul_binomial(m);
  return QR::from_coeffs(std::move(c), 0);
}

// eta_a depends on a only through a mod N up to sign: eta_{a+N} = -eta_a
// (read off from the defining product), and eta_{N-a} = eta_a exactly.
static long fold_index(long a, long N, int* sign) {
  long q = a >= 0 ? a / N : -((-a + N - 1) / N);  // floor division
  long am = a - q * N;
  if (am == 0)
    throw std::domain_error("generalized eta index must be nonzero mod N");
  if (sign && (q % 2 != 0)) *sign = -*sign;
  return am;
}

Rational eta_leading_exponent(const EtaQuotient& spec) {
  Rational e(0);
  if (spec.kind == EtaQuotient::Kind::Classical) {
    for (auto [d, r] : spec.ex) e += Rational(d * r, 24);
  } else {
    long N = spec.level;
    for (auto [a, r] : spec.ex) {
      long am = fold_index(a, N, nullptr);
      // N B(a/N) / 2 with B(x) = x^2 - x + 1/6
      Rational B = Rational(am * am, N * N) - Rational(am, N) + Rational(1, 6);
      e += Rational(N, 2) * B * Rational(r);
    }
  }
  return e;
}

QR eta_expand(const EtaQuotient& spec, long prec) {
  QR acc = QR::one(prec);
  int sign = 1;
  if (spec.kind == EtaQuotient::Kind::Classical) {
    for (auto [d, r] : spec.ex) {
      if (d <= 0) throw std::domain_error("eta index must be positive");
      acc = acc * euler_product(d, prec).pow_int(r);
    }
  } else {
    long N = spec.level;
    for (auto [a, r] : spec.ex) {
      int s = 1;
      long am = fold_index(a, N, &s);
      if (s < 0 && (r % 2 != 0)) sign = -sign;
      if (am > N - am) am = N - am;  // eta_{N-a} = eta_a as a q-series
      acc = acc * generalized_eta_product(N, am, prec).pow_int(r);
    }
  }
  if (sign < 0) acc = -acc;
  return acc.shift_q(eta_leading_exponent(spec)).reduced_denom();
}

Rational eta_cusp_order(const EtaQuotient& spec, long N, long v) {
  if (spec.kind != EtaQuotient::Kind::Classical)
    throw std::domain_error("cusp orders of generalized eta quotients are config data");
  if (N % v != 0) throw std::domain_error("v must divide N");
  Rational s(0);
  for (auto [d, r] : spec.ex) {
    long g = gcd(v, d);
    s += Rational(g * g * r, d);
  }
  return Rational(N, 24 * gcd(v * v, N)) * s;
}

long eta_weight_times2(const EtaQuotient& spec) {
  if (spec.kind != EtaQuotient::Kind::Classical) return 0;
  long w = 0;
  for (auto [d, r] : spec.ex) {
    (void)d;
    w += r;
  }
  return w;
}

QR delta_series(long prec) {
  EtaQuotient d;
  d.kind = EtaQuotient::Kind::Classical;
  d.ex = {{1, 24}};
  return eta_expand(d, prec);
}

QR j_series(long prec) {
  QR e4 = eisenstein_series(4, prec);
  return e4 * e4 * e4 * delta_series(prec).invert();
}

}  // namespace qmf
