#pragma once

#include <string>

#include "qmf/divisor.hpp"

namespace qmf {

// FormInput from a classical eta quotient (plus an optional added constant):
// weight, expansion and cusp orders are all derived.  A nonzero added
// constant caps positive cusp orders at 0 (the shifted value is assumed
// nonzero where the quotient vanishes).
FormInput make_eta_form(const EtaQuotient& eq, const Rational& add_const, long N,
                        long prec);

// Parse a CLI form spec at the given level:
//   "eta:3^3/27^3"            classical eta quotient (/"d^r" factors)
//   "eta:1^2*11^2+const:3"    with an added constant
//   "example6_1"              -(1/10)(E2 - 11 E2(11t) + 24 Delta11), N = 11
//   "delta11"                 eta(t)^2 eta(11t)^2, N = 11
//   "delta"                   discriminant, N = 1
//   "E4" | "E6"               Eisenstein series, N = 1
FormInput parse_form_spec(long N, const std::string& spec, long prec);

}  // namespace qmf
