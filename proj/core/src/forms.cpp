#include "qmf/forms.hpp"

#include <stdexcept>

namespace qmf {

FormInput make_eta_form(const EtaQuotient& eq, const Rational& add_const, long N,
                        long prec) {
  if (eq.kind != EtaQuotient::Kind::Classical)
    throw std::domain_error("eta form inputs must be classical eta quotients");
  for (auto [d, r] : eq.ex) {
    (void)r;
    if (N % d != 0) throw std::domain_error("eta index does not divide the level");
  }
  long w2 = eta_weight_times2(eq);
  if (w2 % 2 != 0) throw std::domain_error("eta quotient of non-integral weight");

  FormInput f;
  f.N = N;
  f.k = static_cast<int>(w2 / 2);
  f.series = eta_expand(eq, prec);
  if (add_const != 0) {
    f.series = f.series + QR::monomial(add_const, 0, f.series.prec());
  }
  if (f.series.denom() != 1)
    throw std::domain_error("eta form has non-integral exponents on Gamma_0(N)");
  if (f.series.leading_coeff() != 1)
    throw std::domain_error("form input must have leading coefficient 1");

  auto cusps = cusps_of(N);
  for (size_t j = 0; j + 1 < cusps.size(); ++j) {
    Rational o = eta_cusp_order(eq, N, cusps[j].v);
    if (add_const != 0 && o > 0) o = 0;
    f.cusp_orders.push_back(o);
  }
  return f;
}

namespace {

FormInput example6_1(long prec) {
  QR e2 = eisenstein_series(2, prec);
  EtaQuotient d11;
  d11.ex = {{1, 2}, {11, 2}};
  QR delta11 = eta_expand(d11, prec);
  QR f = e2 - e2.rescale(11).truncated(prec).scaled(Rational(11)) +
         delta11.scaled(Rational(24));
  FormInput out;
  out.N = 11;
  out.k = 2;
  out.series = f.scaled(Rational(-1, 10));
  // constant term at the cusp 0 is -1/11 (residue theorem), so ord_0 = 0
  out.cusp_orders = {Rational(0)};
  out.name = "example6_1";
  return out;
}

FormInput parse_eta_spec(long N, const std::string& body, long prec) {
  EtaQuotient eq;
  eq.kind = EtaQuotient::Kind::Classical;
  eq.level = N;
  Rational add_const(0);
  std::string spec = body;
  auto cpos = spec.find("+const:");
  if (cpos != std::string::npos) {
    add_const = rat_parse(spec.substr(cpos + 7));
    spec = spec.substr(0, cpos);
  }
  int sign = 1;
  size_t i = 0;
  while (i < spec.size()) {
    size_t j = i;
    while (j < spec.size() && spec[j] != '*' && spec[j] != '/') ++j;
    std::string term = spec.substr(i, j - i);
    auto caret = term.find('^');
    long d = std::stol(caret == std::string::npos ? term : term.substr(0, caret));
    int r = caret == std::string::npos ? 1 : std::stoi(term.substr(caret + 1));
    eq.ex[d] += sign * r;
    if (j < spec.size()) sign = (spec[j] == '/') ? -1 : 1;
    i = j + 1;
  }
  FormInput f = make_eta_form(eq, add_const, N, prec);
  f.name = "eta:" + body;
  return f;
}

}  // namespace

FormInput parse_form_spec(long N, const std::string& spec, long prec) {
  if (spec.rfind("eta:", 0) == 0) return parse_eta_spec(N, spec.substr(4), prec);
  if (spec == "example6_1") {
    if (N != 11) throw std::domain_error("example6_1 lives at level 11");
    return example6_1(prec);
  }
  if (spec == "delta11") {
    if (N != 11) throw std::domain_error("delta11 lives at level 11");
    return parse_eta_spec(11, "1^2*11^2", prec);
  }
  if (spec == "delta") {
    if (N != 1) throw std::domain_error("delta lives at level 1");
    return parse_eta_spec(1, "1^24", prec);
  }
  if (spec == "E4" || spec == "E6") {
    if (N != 1) throw std::domain_error("Eisenstein form inputs live at level 1");
    FormInput f;
    f.N = 1;
    f.k = spec == "E4" ? 4 : 6;
    f.series = eisenstein_series(f.k, prec);
    f.name = spec;
    return f;
  }
  throw std::invalid_argument("unknown form spec: " + spec);
}

}  // namespace qmf
