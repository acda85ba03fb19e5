#include "qmf/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qmf/arith.hpp"

namespace qmf {

namespace {

using ZPoly = std::vector<Integer>;   // dense, constant term first
using QPoly = std::vector<Rational>;  // dense, constant term first

void ztrim(ZPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, b monic.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Integer(0));
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    size_t shift = a.size() - b.size();
    Integer c = a.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    ztrim(a);
    if (a.size() < b.size()) break;
  }
  ztrim(q);
  return q;
}

std::recursive_mutex& table_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

struct CycTable {
  long n;
  long phi;
  ZPoly modulus;                    // Phi_n, monic
  std::vector<std::vector<Rational>> xpow;  // x^j mod Phi_n, j = 0,1,...

  // Returns a copy: the cache may be extended (and reallocated) by other
  // callers between uses of the result.
  std::vector<Rational> row(size_t j) {
    std::lock_guard<std::recursive_mutex> lock(table_mutex());
    while (xpow.size() <= j) {
      // x * previous row, reduced using the monic modulus.
      const auto& prev = xpow.back();
      std::vector<Rational> next(phi, Rational(0));
      for (long i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
      const Rational& top = prev[phi - 1];
      if (top != 0) {
        for (long i = 0; i < phi; ++i) next[i] -= top * Rational(modulus[i]);
      }
      xpow.push_back(std::move(next));
    }
    return xpow[j];
  }
};

CycTable& table_for(long n) {
  static std::map<long, CycTable> tables;
  std::lock_guard<std::recursive_mutex> lock(table_mutex());
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;

  CycTable t;
  t.n = n;
  t.phi = euler_phi(n);
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  ZPoly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    num = zdiv_exact(std::move(num), cyclotomic_polynomial(d));
  }
  t.modulus = std::move(num);
  if (static_cast<long>(t.modulus.size()) != t.phi + 1)
    throw std::logic_error("cyclotomic polynomial degree mismatch");
  t.xpow.reserve(2 * t.phi);
  for (long j = 0; j < t.phi; ++j) {
    std::vector<Rational> e(t.phi, Rational(0));
    e[j] = 1;
    t.xpow.push_back(std::move(e));
  }
  return tables.emplace(n, std::move(t)).first->second;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

void qtrim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  return table_for(n).modulus;
}

Cyc::Cyc(long n, std::vector<Rational> coords) : n_(n), c_(std::move(coords)) {
  auto& t = table_for(n);
  if (static_cast<long>(c_.size()) != t.phi)
    throw std::invalid_argument("cyclotomic coordinate length != phi(n)");
}

Cyc Cyc::zeta(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  auto& t = table_for(n);
  Cyc z;
  z.n_ = n;
  z.c_ = t.row(k);
  return z;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyc::as_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

Cyc Cyc::promote(long L) const {
  if (L == n_) return *this;
  if (L % n_ != 0)
    throw std::domain_error("promotion target conductor is not a multiple");
  auto& t = table_for(L);
  long step = L / n_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& r = t.row(static_cast<size_t>(k) * step);
    for (long i = 0; i < t.phi; ++i) out[i] += c_[k] * r[i];
  }
  return Cyc(L, std::move(out));
}

Cyc Cyc::conj() const {
  auto& t = table_for(n_);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t j = k == 0 ? 0 : static_cast<size_t>(n_ - k);
    const auto& r = t.row(j);
    for (long i = 0; i < t.phi; ++i) out[i] += c_[k] * r[i];
  }
  return Cyc(n_, std::move(out));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::scaled(const Rational& s) const {
  Cyc r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  long L = lcm(a.n_, b.n_);
  Cyc x = a.promote(L), y = b.promote(L);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  long L = lcm(a.n_, b.n_);
  Cyc x = a.promote(L), y = b.promote(L);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  long L = lcm(a.n_, b.n_);
  Cyc x = a.promote(L), y = b.promote(L);
  auto& t = table_for(L);
  QPoly conv = qmul(x.c_, y.c_);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t d = 0; d < conv.size(); ++d) {
    if (conv[d] == 0) continue;
    if (static_cast<long>(d) < t.phi) {
      out[d] += conv[d];
    } else {
      const auto& r = t.row(d);
      for (long i = 0; i < t.phi; ++i) out[i] += conv[d] * r[i];
    }
  }
  return Cyc(L, std::move(out));
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("inversion of zero cyclotomic value");
  auto& t = table_for(n_);
  // Extended Euclid over Q[x]: s*a + t*Phi = 1.
  QPoly r0(t.modulus.size());
  for (size_t i = 0; i < t.modulus.size(); ++i) r0[i] = Rational(t.modulus[i]);
  QPoly r1 = c_;
  qtrim(r1);
  QPoly s0{Rational(0)}, s1{Rational(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // r0 = q*r1 + r2
    QPoly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    QPoly rem = r0;
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      size_t shift = rem.size() - r1.size();
      Rational c = rem.back() / r1.back();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      qtrim(rem);
      if (rem.size() < r1.size()) break;
    }
    QPoly s2 = s0;
    {
      QPoly qs = qmul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      qtrim(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd (Phi_n is irreducible, a nonzero).
  if (r0.size() != 1 || r0[0] == 0)
    throw std::logic_error("cyclotomic inverse: unexpected gcd");
  const QPoly& s = s0;
  Rational scale = Rational(1) / r0[0];
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t d = 0; d < s.size(); ++d) {
    if (s[d] == 0) continue;
    const auto& r = t.row(d);
    if (static_cast<long>(d) < t.phi) {
      out[d] += s[d] * scale;
    } else {
      for (long i = 0; i < t.phi; ++i) out[i] += s[d] * scale * r[i];
    }
  }
  return Cyc(n_, std::move(out));
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

bool operator==(const Cyc& a, const Cyc& b) {
  long L = lcm(a.n_, b.n_);
  Cyc x = a.promote(L), y = b.promote(L);
  return x.c_ == y.c_;
}

std::string Cyc::to_string() const {
  if (is_rational()) return rat_str(c_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_str(c_[i]);
  }
  os << "]@" << n_;
  return os.str();
}

std::pair<double, double> Cyc::to_complex() const {
  double re = 0, im = 0;
  const double tau = 2.0 * 3.14159265358979323846;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double x = c_[k].get_d();
    re += x * std::cos(tau * static_cast<double>(k) / n_);
    im += x * std::sin(tau * static_cast<double>(k) / n_);
  }
  return {re, im};
}

}  // namespace qmf
