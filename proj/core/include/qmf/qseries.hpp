#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qmf/arith.hpp"
#include "qmf/cyclotomic.hpp"
#include "qmf/rational.hpp"

namespace qmf {

namespace detail {

template <class K>
inline bool kzero(const K& x) {
  if constexpr (std::is_same_v<K, Rational>)
    return x == 0;
  else
    return x.is_zero();
}

template <class K>
inline K kinv(const K& x) {
  if constexpr (std::is_same_v<K, Rational>)
    return Rational(1) / x;
  else
    return x.inv();
}

template <class K>
inline K kmul_rat(const K& x, const Rational& r) {
  if constexpr (std::is_same_v<K, Rational>)
    return x * r;
  else
    return x.scaled(r);
}

template <class K>
inline std::string kstr(const K& x) {
  if constexpr (std::is_same_v<K, Rational>)
    return rat_str(x);
  else
    return x.to_string();
}

}  // namespace detail

// Truncated Laurent series in q^{1/M} with exact coefficients.  The window
// [low, prec) is in units of 1/M; coefficients below `low` are exactly zero
// and coefficients at exponents >= prec are unknown.  Values are immutable
// in spirit: every operation returns a new series, and truncation bounds
// propagate so that every stored coefficient is exact.
template <class K>
class QSeries {
 public:
  QSeries() : M_(1), low_(0), prec_(1), c_(1, K{}) {}

  static QSeries zero(long prec, long M = 1) {
    QSeries s;
    s.M_ = M;
    s.low_ = prec - 1;
    s.prec_ = prec;
    s.c_.assign(1, K{});
    return s;
  }

  static QSeries one(long prec, long M = 1) { return monomial(unit_k(), 0, prec, M); }

  static QSeries monomial(const K& v, long e, long prec, long M = 1) {
    if (prec <= e) throw std::invalid_argument("monomial beyond precision");
    QSeries s;
    s.M_ = M;
    s.low_ = e;
    s.prec_ = prec;
    s.c_.assign(prec - e, K{});
    s.c_[0] = v;
    s.trim();
    return s;
  }

  static QSeries from_coeffs(std::vector<K> coeffs, long low, long M = 1) {
    QSeries s;
    s.M_ = M;
    s.low_ = low;
    s.prec_ = low + static_cast<long>(coeffs.size());
    s.c_ = std::move(coeffs);
    if (s.c_.empty()) throw std::invalid_argument("empty coefficient vector");
    s.trim();
    return s;
  }

  long denom() const { return M_; }
  long low() const { return low_; }
  long prec() const { return prec_; }
  long rel_prec() const { return prec_ - low_; }

  // Exponent of the leading (lowest nonzero) coefficient, units of 1/M.
  long leading_exponent() const { return low_; }
  const K& leading_coeff() const { return c_.front(); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!detail::kzero(x)) return false;
    return true;
  }

  // Coefficient at exponent e (units of 1/M).  Below the window the value
  // is exactly zero; at or beyond prec it is unknown and we refuse.
  const K& coeff(long e) const {
    static const K zero_k{};
    if (e >= prec_)
      throw std::domain_error("coefficient beyond series precision");
    if (e < low_) return zero_k;
    return c_[e - low_];
  }

  // Coefficient at rational exponent; exponents outside (1/M)Z are zero.
  K coeff_q(const Rational& e) const {
    Rational scaled = e * M_;
    if (!is_integer(scaled)) {
      if (e * M_ >= prec_) throw std::domain_error("coefficient beyond series precision");
      return K{};
    }
    long idx = to_long(scaled);
    return coeff(idx);
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = negate_k(x);
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    long lo = std::min(x.low_, y.low_);
    long pr = std::min(x.prec_, y.prec_);
    QSeries r;
    r.M_ = x.M_;
    r.low_ = lo;
    r.prec_ = pr;
    r.c_.assign(pr - lo, K{});
    for (long e = lo; e < pr; ++e) {
      K v = (e >= x.low_ && e < x.prec_) ? x.c_[e - x.low_] : K{};
      if (e >= y.low_ && e < y.prec_) v = v + y.c_[e - y.low_];
      r.c_[e - lo] = v;
    }
    r.trim();
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    long lo = x.low_ + y.low_;
    long pr = std::min(x.prec_ + y.low_, y.prec_ + x.low_);
    QSeries r;
    r.M_ = x.M_;
    r.low_ = lo;
    r.prec_ = pr;
    r.c_.assign(pr - lo, K{});
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (detail::kzero(x.c_[i])) continue;
      long ei = x.low_ + static_cast<long>(i);
      long jmax = std::min<long>(y.c_.size(), pr - ei - y.low_);
      for (long j = 0; j < jmax; ++j) {
        if (detail::kzero(y.c_[j])) continue;
        r.c_[ei + y.low_ + j - lo] = r.c_[ei + y.low_ + j - lo] + x.c_[i] * y.c_[j];
      }
    }
    r.trim();
    return r;
  }

  QSeries scaled(const K& s) const {
    QSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  QSeries scaled_rat(const Rational& s) const {
    QSeries r = *this;
    for (auto& x : r.c_) x = detail::kmul_rat(x, s);
    r.trim();
    return r;
  }

  // Multiplicative inverse; requires a nonzero leading coefficient.
  QSeries invert() const {
    QSeries f = *this;
    f.trim();
    if (f.is_zero())
      throw std::domain_error("invert: series is zero to precision");
    long R = f.prec_ - f.low_;
    const K& lead = f.c_[0];
    K lead_inv = detail::kinv(lead);
    std::vector<K> u(R), v(R);
    for (long i = 0; i < R; ++i) u[i] = f.c_[i] * lead_inv;  // u_0 = 1
    v[0] = unit_k();
    for (long k = 1; k < R; ++k) {
      K s{};
      for (long j = 1; j <= k; ++j) {
        if (detail::kzero(u[j]) || detail::kzero(v[k - j])) continue;
        s = s + u[j] * v[k - j];
      }
      v[k] = negate_k(s);
    }
    QSeries r;
    r.M_ = f.M_;
    r.low_ = -f.low_;
    r.prec_ = -f.low_ + R;
    r.c_.resize(R);
    for (long i = 0; i < R; ++i) r.c_[i] = v[i] * lead_inv;
    r.trim();
    return r;
  }

  QSeries pow_int(long n) const {
    if (n == 0) return one(rel_prec(), M_);
    QSeries base = n < 0 ? invert() : *this;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    QSeries acc = base;
    --e;
    QSeries sq = base;
    while (e) {
      if (e & 1) acc = acc * sq;
      if (e >>= 1) sq = sq * sq;
    }
    return acc;
  }

  // Multiply by q^{k/M} (exponent shift in current units).
  QSeries shift_units(long k) const {
    QSeries r = *this;
    r.low_ += k;
    r.prec_ += k;
    return r;
  }

  // Multiply by q^r for rational r.
  QSeries shift_q(const Rational& r) const {
    long den = static_cast<long>(r.get_den().get_si());
    long L = lcm(M_, den);
    QSeries s = with_denom(L);
    Rational steps = r * L;
    return s.shift_units(to_long(steps));
  }

  // q -> q^s substitution.
  QSeries rescale(long s) const {
    if (s <= 0) throw std::invalid_argument("rescale expects s >= 1");
    if (s == 1) return *this;
    QSeries r;
    r.M_ = M_;
    r.low_ = low_ * s;
    r.prec_ = prec_ * s;
    r.c_.assign(r.prec_ - r.low_, K{});
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * s] = c_[i];
    r.trim();
    return r;
  }

  // Theta = q d/dq: coefficient at exponent e gets multiplied by e.
  QSeries theta() const {
    QSeries r = *this;
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = low_ + static_cast<long>(i);
      r.c_[i] = detail::kmul_rat(c_[i], Rational(e, M_));
    }
    r.trim();
    return r;
  }

  QSeries truncated(long new_prec) const {
    if (new_prec >= prec_) return *this;
    QSeries r;
    r.M_ = M_;
    if (new_prec <= low_) return zero(new_prec, M_);
    r.low_ = low_;
    r.prec_ = new_prec;
    r.c_.assign(c_.begin(), c_.begin() + (new_prec - low_));
    r.trim();
    return r;
  }

  // Re-express with a larger denominator L (M | L).
  QSeries with_denom(long L) const {
    if (L == M_) return *this;
    if (L % M_ != 0) throw std::invalid_argument("denominator must be a multiple");
    long s = L / M_;
    QSeries r = rescale(s);
    r.M_ = L;
    return r;
  }

  // Reduce M as far as the support allows (e.g. after an eta product whose
  // fractional prefactors cancel).  Returns a series with minimal M.
  QSeries reduced_denom() const {
    QSeries f = *this;
    f.trim();
    if (f.M_ == 1) return f;
    auto fdiv = [](long a, long b) {  // floor division, b > 0
      return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    long g = f.M_;
    bool any = false;
    for (size_t i = 0; i < f.c_.size(); ++i) {
      if (detail::kzero(f.c_[i])) continue;
      any = true;
      long e = f.low_ + static_cast<long>(i);
      g = gcd(g, e < 0 ? -e : e);
      if (g == 1) return f;
    }
    long new_prec = fdiv(f.prec_ - 1, g) + 1;
    if (!any) return zero(new_prec, f.M_ / g);
    QSeries r;
    r.M_ = f.M_ / g;
    r.low_ = f.low_ / g;  // exact: g divides the leading exponent
    r.prec_ = new_prec;
    r.c_.assign(r.prec_ - r.low_, K{});
    for (size_t i = 0; i < f.c_.size(); ++i) {
      long e = f.low_ + static_cast<long>(i);
      if (e % g == 0) r.c_[e / g - r.low_] = f.c_[i];
    }
    r.trim();
    return r;
  }

  bool is_integral() const {
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = low_ + static_cast<long>(i);
      if (e % M_ != 0 && !detail::kzero(c_[i])) return false;
    }
    return true;
  }

  // Serialization: one line per nonzero coefficient, "exponent<TAB>coeff".
  std::string to_lines() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (detail::kzero(c_[i])) continue;
      long e = low_ + static_cast<long>(i);
      os << rat_str(Rational(e, M_)) << "\t" << detail::kstr(c_[i]) << "\n";
    }
    return os.str();
  }

  std::string pretty(long max_terms = 12) const {
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
      if (detail::kzero(c_[i])) continue;
      long e = low_ + static_cast<long>(i);
      if (!first) os << " + ";
      os << "(" << detail::kstr(c_[i]) << ")q^" << rat_str(Rational(e, M_));
      first = false;
      ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << rat_str(Rational(prec_, M_)) << ")";
    return os.str();
  }

 private:
  static K unit_k() {
    if constexpr (std::is_same_v<K, Rational>)
      return Rational(1);
    else
      return K(Rational(1));
  }
  static K negate_k(const K& x) { return -x; }

  void trim() {
    size_t drop = 0;
    while (drop + 1 < c_.size() && detail::kzero(c_[drop])) ++drop;
    if (drop) {
      c_.erase(c_.begin(), c_.begin() + drop);
      low_ += static_cast<long>(drop);
    }
  }

  static std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b) {
    long L = lcm(a.M_, b.M_);
    return {a.with_denom(L), b.with_denom(L)};
  }

  long M_;
  long low_;
  long prec_;
  std::vector<K> c_;
};

using QR = QSeries<Rational>;
using QC = QSeries<Cyc>;

inline QC promote(const QR& s) {
  std::vector<Cyc> c;
  c.reserve(s.prec() - s.low());
  for (long e = s.low(); e < s.prec(); ++e) c.emplace_back(s.coeff(e));
  return QC::from_coeffs(std::move(c), s.low(), s.denom());
}

// True when a == b on the overlap of their known windows.
template <class K>
bool eq_to_prec(const QSeries<K>& a, const QSeries<K>& b) {
  return (a - b).is_zero();
}

}  // namespace qmf
