#include "qmf/eis_space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmf/arith.hpp"

namespace qmf {

std::string EisElement::label() const {
  std::ostringstream os;
  if (kind == Kind::E2Diff)
    os << "E2-" << d << "E2(" << d << "t)";
  else
    os << "E2[chi mod " << chi.modulus() << " #" << chi.order() << "](" << t << "t)";
  return os.str();
}

std::vector<EisElement> eis_basis(long N) {
  if (N < 2) return {};
  std::vector<EisElement> out;
  for (long d : divisors(N)) {
    if (d == 1) continue;
    EisElement el;
    el.kind = EisElement::Kind::E2Diff;
    el.d = d;
    out.push_back(std::move(el));
  }
  for (long u : divisors(N)) {
    if (u < 3 || N % (u * u) != 0) continue;
    auto prim = DirichletCharacter::primitive_characters(u);
    if (prim.empty()) continue;
    for (long t : divisors(N / (u * u))) {
      for (const auto& chi : prim) {
        EisElement el;
        el.kind = EisElement::Kind::CharEis;
        el.chi = chi;
        el.t = t;
        out.push_back(std::move(el));
      }
    }
  }
  size_t cusp_count = cusps_of(N).size();
  if (out.size() + 1 != cusp_count)
    throw std::logic_error("Eisenstein basis size != #cusps - 1 at N = " +
                           std::to_string(N));
  // order CharEis by (u, t, index): rebuild deterministic ordering
  std::stable_sort(out.begin(), out.end(), [](const EisElement& a, const EisElement& b) {
    if (a.kind != b.kind) return a.kind == EisElement::Kind::E2Diff;
    if (a.kind == EisElement::Kind::E2Diff) return a.d < b.d;
    if (a.chi.modulus() != b.chi.modulus()) return a.chi.modulus() < b.chi.modulus();
    return a.t < b.t;
  });
  return out;
}

Rational e2diff_const(long d, long v) {
  long g = gcd(d, v);
  return Rational(1) - Rational(g * g, d);
}

Cyc char_eis_const(const DirichletCharacter& chi, long t, const Cusp& c, long N) {
  if (!chi.is_primitive() || chi.is_trivial())
    throw std::domain_error("char_eis_const needs a primitive nontrivial character");
  long u = chi.modulus();
  if (t * u * u > N || N % (t * u * u) != 0)
    throw std::domain_error("char_eis_const requires t u^2 | N");
  long v = c.v;
  if (v == N) return Cyc(Rational(0));  // infinity class: zero constant term
  long s = gcd(v, t);
  if (v % (u * s) != 0) return Cyc(Rational(0));
  if (gcd(v, N / v) % u != 0) return Cyc(Rational(0));
  long t1 = t / s;
  Cyc sum(Rational(0));
  for (long d = 1; d < u; ++d) {
    if (gcd(d, u) != 1) continue;
    Cyc phi_val = chi.value(-c.e * t1 * d * d);
    if (phi_val.is_zero()) continue;
    sum += phi_val * inv_one_minus_cos(d, u);
  }
  Cyc g = gauss_sum(chi);
  return -(sum * g.inv()).scaled(Rational(1, 2 * t));
}

Cyc eis_const(const EisElement& el, const Cusp& c, long N) {
  if (el.kind == EisElement::Kind::E2Diff)
    return Cyc(e2diff_const(el.d, c.v));
  return char_eis_const(el.chi, el.t, c, N);
}

QC eis_expansion(const EisElement& el, long prec) {
  if (el.kind == EisElement::Kind::E2Diff) {
    QR e2 = eisenstein_series(2, prec);
    QR s = e2 - e2.rescale(el.d).truncated(prec).scaled(Rational(el.d));
    return promote(s);
  }
  return char_eisenstein_q(el.chi, prec).rescale(el.t).truncated(prec);
}

namespace {

// Exact Gaussian elimination over the cyclotomic field.
std::vector<Cyc> solve_linear(std::vector<std::vector<Cyc>> m, std::vector<Cyc> b) {
  size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular Eisenstein constant matrix");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    Cyc inv = m[col][col].inv();
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    b[col] = b[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Cyc f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

}  // namespace

EfSolution solve_Ef_rhs(long N, const std::vector<Cyc>& rhs, long prec) {
  auto basis = eis_basis(N);
  auto cusps = cusps_of(N);
  size_t n = basis.size();
  if (rhs.size() != n)
    throw std::invalid_argument("solve_Ef: need one value per finite cusp");

  EfSolution sol;
  sol.N = N;
  sol.basis = basis;
  if (n == 0) {
    sol.Ef = QC::zero(prec);
    return sol;
  }
  std::vector<std::vector<Cyc>> m(n, std::vector<Cyc>(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m[j][i] = eis_const(basis[i], cusps[j], N);
  sol.alphas = solve_linear(std::move(m), rhs);

  QC acc = QC::zero(prec);
  for (size_t i = 0; i < n; ++i) {
    if (sol.alphas[i].is_zero()) continue;
    acc = acc + eis_expansion(basis[i], prec).scaled(sol.alphas[i]);
  }
  sol.Ef = std::move(acc);
  return sol;
}

EfSolution solve_Ef(long N, int k, const std::vector<Rational>& cusp_orders,
                    long prec) {
  auto cusps = cusps_of(N);
  if (cusp_orders.size() + 1 != cusps.size())
    throw std::invalid_argument("cusp_orders must cover all cusps except infinity");
  std::vector<Cyc> rhs;
  rhs.reserve(cusp_orders.size());
  for (size_t j = 0; j + 1 < cusps.size(); ++j) {
    Rational c = cusp_orders[j] / Rational(cusp_width(cusps[j].v, N)) - Rational(k, 12);
    rhs.emplace_back(c);
  }
  return solve_Ef_rhs(N, rhs, prec);
}

Cyc EfSolution::eps(long n) const {
  if (basis.empty()) return Cyc(Rational(0));
  return Ef.coeff(n);
}

}  // namespace qmf
