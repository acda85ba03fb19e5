#include "qmf/minpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qmf {

Cyc ExactPoly::eval(const Cyc& x) const {
  Cyc acc(Rational(0));
  for (size_t i = coef.size(); i-- > 0;) acc = acc * x + coef[i];
  return acc;
}

bool ExactPoly::all_rational() const {
  for (const auto& c : coef)
    if (!c.is_rational()) return false;
  return true;
}

std::string ExactPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coef.size(); ++i) {
    if (i) os << ", ";
    os << coef[i].to_string();
  }
  os << "]";
  return os.str();
}

Cyc functional_apply(const DivisorFunctional& L, const QR& f) {
  if (!L.report || !L.fam) throw std::invalid_argument("unbound divisor functional");
  BasisExpansion ex = expand_in_basis(f, *L.fam);
  if (!ex.gap_ok)
    throw std::domain_error("functional_apply: gap coefficients do not match");
  if (!ex.residual_zero)
    throw std::domain_error("functional_apply: input is not in the basis span");
  Cyc acc = L.report->L1.scaled(ex.c0);
  for (auto& [m, cm] : ex.cm) {
    auto it = L.report->sums.find(m);
    if (it == L.report->sums.end())
      throw std::domain_error("functional_apply: divisor sums not computed to m = " +
                              std::to_string(m));
    acc += it->second.scaled(cm);
  }
  return acc;
}

std::vector<Cyc> power_sums(const DivisorFunctional& L, long m0, long r_max) {
  if (!L.report) throw std::invalid_argument("unbound divisor functional");
  std::vector<Cyc> p;
  QR f = L.fam->at(m0);
  QR pw = f;
  for (long r = 1; r <= r_max; ++r) {
    p.push_back(functional_apply(L, pw));
    if (r < r_max) pw = pw * f;
  }
  return p;
}

long divisor_point_count(const DivisorReport& rep) {
  if (!rep.L1.is_rational())
    throw std::domain_error("point count: L1 is not rational");
  Rational v = rep.L1.as_rational();
  if (!is_nonneg_integer(v))
    throw std::domain_error(
        "point count: L1 = " + rat_str(v) +
        " is not a nonnegative integer (use an explicit degree override)");
  return to_long(v);
}

ExactPoly newton_minpoly(const std::vector<Cyc>& p, long ell) {
  if (ell < 0) throw std::domain_error("newton_minpoly: negative degree");
  if (static_cast<long>(p.size()) < ell)
    throw std::invalid_argument("newton_minpoly: need power sums p_1..p_ell");
  // e_r = (1/r) sum_{i=1}^{r} (-1)^{i-1} e_{r-i} p_i
  std::vector<Cyc> e(ell + 1, Cyc(Rational(0)));
  e[0] = Cyc(Rational(1));
  for (long r = 1; r <= ell; ++r) {
    Cyc acc(Rational(0));
    for (long i = 1; i <= r; ++i) {
      Cyc term = e[r - i] * p[i - 1];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e[r] = acc.scaled(Rational(1, r));
  }
  ExactPoly P;
  P.coef.assign(ell + 1, Cyc(Rational(0)));
  for (long i = 0; i <= ell; ++i) {
    // coefficient of X^{ell-i} is (-1)^i e_i
    P.coef[ell - i] = (i % 2 == 0) ? e[i] : -e[i];
  }
  return P;
}

std::vector<Cyc> power_sums_of_roots(const std::vector<Rational>& roots, long r_max) {
  std::vector<Cyc> p;
  for (long r = 1; r <= r_max; ++r) {
    Rational s(0);
    for (const auto& x : roots) s += rat_pow(x, r);
    p.emplace_back(s);
  }
  return p;
}

ExactPoly poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  ExactPoly P;
  for (auto& x : c) P.coef.emplace_back(x);
  return P;
}

}  // namespace qmf
