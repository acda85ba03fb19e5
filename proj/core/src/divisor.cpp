#include "qmf/divisor.hpp"

#include <stdexcept>

namespace qmf {

std::vector<Rational> product_exponents(const QR& f, long count) {
  if (f.is_zero() || f.leading_coeff() != 1)
    throw std::domain_error("product_exponents requires leading coefficient 1");
  if (f.denom() != 1)
    throw std::domain_error("product_exponents requires integral exponents");
  long h = f.low();
  if (f.prec() - h <= count)
    throw std::domain_error("series precision too low for requested exponent count");
  // a(m) = coefficient of q^m in q^{-h} f
  auto a = [&](long m) -> Rational { return f.coeff(m + h); };
  std::vector<Rational> c(count + 1, Rational(0));  // c[1..count]
  std::vector<Rational> S(count + 1, Rational(0));  // S(m) = sum_{u|m} u c(u)
  for (long m = 1; m <= count; ++m) {
    Rational acc(0);
    for (long u : divisors(m))
      if (u < m) acc += Rational(u) * c[u];
    Rational conv(0);
    for (long k = 1; k < m; ++k) {
      if (S[k] == 0) continue;
      Rational am = a(m - k);
      if (am == 0) continue;
      conv += am * S[k];
    }
    c[m] = -a(m) - (acc + conv) / Rational(m);
    S[m] = acc + Rational(m) * c[m];
  }
  return std::vector<Rational>(c.begin() + 1, c.end());
}

QR serre_quotient(const FormInput& f, long prec) {
  auto c = product_exponents(f.series, prec - 1);
  std::vector<Rational> out(prec, Rational(0));
  out[0] = Rational(f.h()) - Rational(f.k, 12);
  for (long n = 1; n < prec; ++n) {
    Rational S(0);
    for (long d : divisors(n)) S += Rational(d) * c[d - 1];
    out[n] = -S + Rational(2 * f.k) * Rational(sigma1(n));
  }
  return QR::from_coeffs(std::move(out), 0);
}

DivisorReport divisor_sums(const FormInput& f, const BasisFamily& fam, long n_max) {
  if (f.N != fam.level()) throw std::invalid_argument("level mismatch");
  if (fam.m_max() < n_max)
    throw std::invalid_argument("basis family not built to n_max");
  LevelData ld = level_data(f.N);
  long g = ld.genus;
  if (f.cusp_orders.size() + 1 != ld.cusps.size())
    throw std::invalid_argument("cusp orders must cover all finite cusps");

  DivisorReport rep;
  rep.N = f.N;
  rep.k = f.k;
  rep.h = f.h();
  rep.genus = g;
  rep.c = product_exponents(f.series, n_max);
  rep.ftheta = serre_quotient(f, n_max + 1);
  rep.ef = solve_Ef(f.N, f.k, f.cusp_orders, n_max + 1);

  auto base = [&](long n) -> Cyc {
    Rational S(0);
    for (long d : divisors(n)) S += Rational(d) * rep.c[d - 1];
    Cyc v(S - Rational(2 * f.k) * Rational(sigma1(n)));
    return v + rep.ef.eps(n);
  };

  for (long n = g + 1; n <= n_max; ++n) {
    Cyc s = base(n);
    for (long ell = 1; ell <= g; ++ell)
      s += base(ell).scaled(fam.a(n, -ell));
    rep.sums.emplace(n, std::move(s));
  }
  rep.L1 = Cyc(Rational(-rep.h) + Rational(f.k, 12)) + rep.ef.eps(0);
  return rep;
}

QC gtfne_residual(const FormInput& f, const BasisFamily& fam, long prec) {
  if (f.N != fam.level()) throw std::invalid_argument("level mismatch");
  long g = fam.genus();
  QR ftheta = serre_quotient(f, prec);
  EfSolution ef = solve_Ef(f.N, f.k, f.cusp_orders, prec);
  QC res = promote(-ftheta) + ef.Ef;
  auto c = product_exponents(f.series, g > 0 ? g : 0);
  for (long ell = 1; ell <= g; ++ell) {
    Rational S(0);
    for (long d : divisors(ell)) S += Rational(d) * c[d - 1];
    Cyc corr = Cyc(-S + Rational(2 * f.k) * Rational(sigma1(ell))) - ef.eps(ell);
    if (corr.is_zero()) continue;
    res = res + promote(fam.dual(ell, prec)).scaled(corr);
  }
  return res;
}

}  // namespace qmf
