#pragma once

#include <complex>
#include <vector>

#include "qmf/basis.hpp"
#include "qmf/minpoly.hpp"

namespace qmf {

using Complex = std::complex<double>;

struct EvalResult {
  Complex value;
  double tail = 0.0;  // rigorous-style geometric bound on the truncation tail
};

// Evaluate a series at tau in the upper half-plane (im > 0).
EvalResult eval_series(const QR& f, Complex tau);

// Approximate zeros of f in the band |re| <= 1/2, im >= im_floor.  Returns
// count_hint refined points (deduplicated modulo the width-1 translation);
// throws if fewer are found.
std::vector<Complex> locate_zeros(const QR& f, long count_hint,
                                  double im_floor = 0.05, double im_ceil = 1.6);

// max_s |P(f_{N,m0}(z_s))| < tol for every located point.
bool verify_minpoly(const std::vector<Complex>& points, const BasisFamily& fam,
                    long m0, const ExactPoly& P, double tol);

}  // namespace qmf
