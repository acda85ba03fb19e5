#include "qmf/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmf {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

Complex q_power(Complex tau, double e) {
  // exp(2 pi i e tau)
  Complex z = Complex(0.0, kTau * e) * tau;
  return std::exp(z);
}

}  // namespace

EvalResult eval_series(const QR& f, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("eval_series needs im(tau) > 0");
  double M = static_cast<double>(f.denom());
  Complex w = q_power(tau, 1.0 / M);  // q^{1/M}
  double aw = std::abs(w);
  // Horner from the top of the window down to `low`.
  Complex acc(0.0, 0.0);
  for (long e = f.prec() - 1; e >= f.low(); --e) {
    acc = acc * w;
    const Rational& c = f.coeff(e);
    if (c != 0) acc += Complex(c.get_d(), 0.0);
  }
  // multiply the q^{low} prefactor
  Complex value = acc * q_power(tau, static_cast<double>(f.low()) / M);
  // geometric tail bound from the magnitudes of the last kept coefficients
  double m = 0.0;
  long kept = 0;
  for (long e = f.prec() - 1; e >= f.low() && kept < 10; --e, ++kept)
    m = std::max(m, std::abs(f.coeff(e).get_d()));
  double tail = 0.0;
  if (aw < 1.0) tail = m * std::pow(aw, static_cast<double>(f.prec())) / (1.0 - aw);
  return {value, tail};
}

std::vector<Complex> locate_zeros(const QR& f, long count_hint, double im_floor,
                                  double im_ceil) {
  if (count_hint <= 0) return {};
  const int nx = 120, ny = 90;
  std::vector<std::vector<double>> mag(ny, std::vector<double>(nx));
  auto absf = [&](Complex t) { return std::abs(eval_series(f, t).value); };
  for (int iy = 0; iy < ny; ++iy) {
    double y = im_floor + (im_ceil - im_floor) * iy / (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
      double x = -0.5 + 1.0 * ix / (nx - 1);
      mag[iy][ix] = absf(Complex(x, y));
    }
  }
  // local minima as Newton starting points
  std::vector<Complex> starts;
  for (int iy = 1; iy + 1 < ny; ++iy) {
    for (int ix = 1; ix + 1 < nx; ++ix) {
      double v = mag[iy][ix];
      if (v < mag[iy - 1][ix] && v < mag[iy + 1][ix] && v < mag[iy][ix - 1] &&
          v < mag[iy][ix + 1]) {
        starts.emplace_back(-0.5 + 1.0 * ix / (nx - 1),
                            im_floor + (im_ceil - im_floor) * iy / (ny - 1));
      }
    }
  }
  std::sort(starts.begin(), starts.end(), [&](Complex a, Complex b) {
    return absf(a) < absf(b);
  });

  QR th = f.theta();
  std::vector<Complex> zeros;
  for (Complex z : starts) {
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      EvalResult fv = eval_series(f, z);
      if (std::abs(fv.value) < 1e-11) {
        ok = true;
        break;
      }
      EvalResult dv = eval_series(th, z);
      Complex deriv = Complex(0.0, kTau) * dv.value;  // d/dtau = 2 pi i Theta
      if (std::abs(deriv) < 1e-14) break;
      Complex step = fv.value / deriv;
      z -= step;
      if (z.imag() < im_floor * 0.4 || z.imag() > im_ceil * 2.0) break;
      if (std::abs(step) < 1e-15) {
        ok = std::abs(eval_series(f, z).value) < 1e-9;
        break;
      }
    }
    if (!ok) continue;
    // fold into |re| <= 1/2 (q-series are width-1 periodic)
    double re = z.real() - std::round(z.real());
    Complex folded(re, z.imag());
    bool dup = false;
    for (Complex w : zeros)
      if (std::abs(w - folded) < 1e-6) dup = true;
    if (!dup) zeros.push_back(folded);
    if (static_cast<long>(zeros.size()) == count_hint) break;
  }
  if (static_cast<long>(zeros.size()) < count_hint)
    throw std::domain_error("locate_zeros: found " + std::to_string(zeros.size()) +
                            " of " + std::to_string(count_hint) + " hinted zeros");
  std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  return zeros;
}

bool verify_minpoly(const std::vector<Complex>& points, const BasisFamily& fam,
                    long m0, const ExactPoly& P, double tol) {
  for (Complex z : points) {
    Complex x = eval_series(fam.at(m0), z).value;
    // evaluate P at x in doubles
    Complex acc(0.0, 0.0);
    for (size_t i = P.coef.size(); i-- > 0;) {
      auto [re, im] = P.coef[i].to_complex();
      acc = acc * x + Complex(re, im);
    }
    if (std::abs(acc) >= tol) return false;
  }
  return true;
}

}  // namespace qmf
