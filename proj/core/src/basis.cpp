#include "qmf/basis.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "qmf/cyclotomic.hpp"

namespace qmf {

using nlohmann::json;

namespace {

std::map<long, int> parse_exponent_map(const json& j) {
  std::map<long, int> m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m[std::stol(it.key())] = it.value().get<int>();
  return m;
}

}  // namespace

LevelConfig parse_level_config(const std::string& text) {
  json j = json::parse(text);
  LevelConfig cfg;
  cfg.level = j.at("level").get<long>();
  cfg.genus_hint = j.value("genus_hint", 0L);
  cfg.precision = j.value("precision", 80L);
  for (const auto& gj : j.at("generators")) {
    GeneratorSpec gen;
    std::string kind = gj.at("kind").get<std::string>();
    if (kind == "eta") {
      gen.kind = GeneratorSpec::Kind::Eta;
      gen.eta.kind = EtaQuotient::Kind::Classical;
      gen.eta.level = cfg.level;
      gen.eta.ex = parse_exponent_map(gj.at("exponents"));
    } else if (kind == "trace") {
      gen.kind = GeneratorSpec::Kind::Trace;
      for (const auto& mj : gj.at("orbit"))
        gen.trace.members.push_back(parse_exponent_map(mj));
      if (gj.contains("multipliers")) {
        for (const auto& mj : gj.at("multipliers")) {
          long num = mj.at(0).get<long>(), den = mj.at(1).get<long>();
          gen.trace.multipliers.emplace_back(num, den);
        }
      }
    } else if (kind == "seed") {
      gen.kind = GeneratorSpec::Kind::Seed;
      gen.seed.low = gj.at("low").get<long>();
      for (const auto& cj : gj.at("seed_series"))
        gen.seed.coeffs.push_back(rat_parse(cj.get<std::string>()));
      gen.seed.provenance = gj.value("provenance", "");
    } else if (kind == "j744") {
      gen.kind = GeneratorSpec::Kind::JMinus744;
    } else {
      throw std::invalid_argument("unknown generator kind: " + kind);
    }
    cfg.generators.push_back(std::move(gen));
  }
  if (j.contains("order_table")) {
    OrderTable t;
    const auto& tj = j.at("order_table");
    for (const auto& s : tj.at("rows")) t.row_names.push_back(s.get<std::string>());
    for (const auto& s : tj.at("cols")) t.col_names.push_back(s.get<std::string>());
    for (const auto& row : tj.at("orders")) {
      std::vector<long> r;
      for (const auto& x : row) r.push_back(x.get<long>());
      t.orders.push_back(std::move(r));
    }
    cfg.order_table = std::move(t);
  }
  return cfg;
}

bool check_yang_conditions(const std::map<long, int>& r, long N,
                           std::string* diagnostics) {
  long s0 = 0, s1 = 0;
  // sum a^2 r_a can exceed long comfortably only for huge tables; keep exact.
  Integer s2 = 0;
  for (auto [a, ra] : r) {
    if (a % N == 0)
      throw std::domain_error("yang conditions: index divisible by N");
    s0 += ra;
    s1 += a * ra;
    s2 += Integer(a) * a * ra;
  }
  bool c1 = s0 % 12 == 0;
  bool c2 = s1 % 2 == 0;
  bool c3 = mpz_divisible_ui_p(s2.get_mpz_t(), static_cast<unsigned long>(2 * N)) != 0;
  if (diagnostics) {
    std::ostringstream os;
    os << "sum r = " << s0 << " (mod 12: " << ((s0 % 12 + 12) % 12) << "), "
       << "sum a r = " << s1 << " (mod 2: " << ((s1 % 2 + 2) % 2) << "), "
       << "sum a^2 r = " << s2.get_str() << " (mod " << 2 * N << ")";
    *diagnostics = os.str();
  }
  return c1 && c2 && c3;
}

QR orbit_trace(const TraceSpec& spec, long N, long prec) {
  if (spec.members.empty())
    throw std::invalid_argument("orbit trace needs at least one member");
  if (!spec.multipliers.empty() && spec.multipliers.size() != spec.members.size())
    throw std::invalid_argument("multiplier count mismatch");

  bool trivial_mult = true;  // every multiplier is exactly 1
  for (auto [num, den] : spec.multipliers)
    if (((num % den) + den) % den != 0) trivial_mult = false;

  std::vector<QR> expansions;
  for (size_t i = 0; i < spec.members.size(); ++i) {
    std::string diag;
    if (!check_yang_conditions(spec.members[i], N, &diag))
      throw std::domain_error("trace member fails Yang conditions: " + diag);
    EtaQuotient eq;
    eq.kind = EtaQuotient::Kind::Generalized;
    eq.level = N;
    eq.ex = spec.members[i];
    QR s = eta_expand(eq, prec);
    if (s.denom() != 1)
      throw std::domain_error("trace member has non-integral exponents");
    expansions.push_back(std::move(s));
  }

  if (trivial_mult) {
    QR acc = expansions[0];
    for (size_t i = 1; i < expansions.size(); ++i) acc = acc + expansions[i];
    return acc;
  }

  // Nontrivial roots of unity: work over Q(zeta) and insist the sum is
  // rational (the traced coefficients are asserted rational at shipped
  // levels).
  QC acc = promote(expansions[0]);
  {
    auto [num, den] = spec.multipliers[0];
    acc = acc.scaled(Cyc::zeta(den, num));
  }
  for (size_t i = 1; i < expansions.size(); ++i) {
    auto [num, den] = spec.multipliers[i];
    acc = acc + promote(expansions[i]).scaled(Cyc::zeta(den, num));
  }
  std::vector<Rational> coeffs;
  for (long e = acc.low(); e < acc.prec(); ++e) {
    const Cyc& x = acc.coeff(e);
    if (!x.is_rational())
      throw std::domain_error("orbit trace produced non-rational coefficients");
    coeffs.push_back(x.as_rational());
  }
  return QR::from_coeffs(std::move(coeffs), acc.low(), acc.denom());
}

std::vector<long> exponent_search(const std::vector<std::vector<long>>& orders,
                                  size_t marked_col, long target,
                                  long box_lo, long box_hi) {
  size_t rows = orders.size();
  if (rows == 0) throw std::invalid_argument("empty order table");
  size_t cols = orders[0].size();
  if (marked_col >= cols) throw std::invalid_argument("marked column out of range");
  std::vector<long> x(rows, box_lo);
  while (true) {
    long marked = 0;
    for (size_t i = 0; i < rows; ++i) marked += x[i] * orders[i][marked_col];
    if (marked == -target) {
      bool ok = true;
      for (size_t c = 0; c < cols && ok; ++c) {
        if (c == marked_col) continue;
        long s = 0;
        for (size_t i = 0; i < rows; ++i) s += x[i] * orders[i][c];
        if (s < -target) ok = false;
      }
      if (ok) return x;
    }
    // lexicographic successor: last coordinate varies fastest, so the
    // first hit is lexicographically smallest.
    size_t i = rows;
    while (i > 0) {
      --i;
      if (++x[i] <= box_hi) break;
      x[i] = box_lo;
      if (i == 0) throw std::domain_error("exponent_search: no solution in box");
    }
  }
}

const QR& BasisFamily::at(long m) const {
  if (m == 0) return one_;
  auto it = f_.find(m);
  if (it == f_.end())
    throw std::domain_error("basis element not built: m = " + std::to_string(m));
  return it->second;
}

Rational BasisFamily::a(long m, long n) const {
  if (m == 0) return n == 0 ? Rational(1) : Rational(0);
  if (m >= 1 && m <= g_) return Rational(0);  // f_{N,m} = 0 in the gap range
  return at(m).coeff(n);
}

QR BasisFamily::dual(long ell, long prec) const {
  if (ell < 0 || ell > g_) throw std::domain_error("dual index must lie in 0..g");
  if (m_max_ < prec - 1)
    throw std::domain_error("dual: family not built deep enough for requested precision");
  std::vector<Rational> c(prec, Rational(0));
  c[ell] = 1;
  for (long m = g_ + 1; m < prec; ++m) c[m] = -a(m, -ell);
  return QR::from_coeffs(std::move(c), 0);
}

namespace {

// Subtract built elements until the leading pole is new; reports the
// fully-reduced series.  Pure bookkeeping for build_basis.
struct Reducer {
  const std::map<long, QR>& built;

  // Removes any pole orders that are already present.  Returns the
  // remaining series (possibly with a new pole order, possibly regular).
  QR peel_known(QR s) const {
    while (!s.is_zero() && s.low() < 0) {
      long p = -s.low();
      auto it = built.find(p);
      if (it == built.end()) break;
      s = s - it->second.scaled(s.leading_coeff());
    }
    return s;
  }
};

}  // namespace

BasisFamily build_basis(const LevelConfig& cfg, long m_max, long prec) {
  LevelData ld = level_data(cfg.level);
  long N = cfg.level;
  long g = ld.genus;
  if (cfg.genus_hint != 0 && cfg.genus_hint != g)
    throw std::domain_error("config genus_hint disagrees with the genus formula");

  BasisFamily fam;
  fam.N_ = N;
  fam.g_ = g;
  fam.one_ = QR::one(prec);

  // Expand the configured generators.
  std::map<long, QR> pool;  // pole order -> candidate (monic)
  Reducer red{fam.f_};
  auto add_candidate = [&](QR s) {
    while (true) {
      s = red.peel_known(s);
      if (s.is_zero() || s.low() >= 0) return;  // constant/positive tail: redundant
      long p = -s.low();
      if (p <= g)
        throw std::domain_error(
            "generator reduces to a pole order inside the Weierstrass gaps");
      auto it = pool.find(p);
      if (it == pool.end()) {
        pool.emplace(p, s.scaled(Rational(1) / s.leading_coeff()));
        return;
      }
      s = s - it->second.scaled(s.leading_coeff());
    }
  };

  for (const auto& gen : cfg.generators) {
    switch (gen.kind) {
      case GeneratorSpec::Kind::Eta: {
        QR s = eta_expand(gen.eta, prec);
        if (s.denom() != 1)
          throw std::domain_error("eta generator has non-integral exponents");
        add_candidate(std::move(s));
        break;
      }
      case GeneratorSpec::Kind::Trace:
        add_candidate(orbit_trace(gen.trace, N, prec));
        break;
      case GeneratorSpec::Kind::Seed:
        add_candidate(QR::from_coeffs(gen.seed.coeffs, gen.seed.low));
        break;
      case GeneratorSpec::Kind::JMinus744:
        add_candidate(j_series(prec));
        break;
    }
  }

  // Echelonize ascending; products of built elements fill pole orders the
  // generators do not reach directly.
  for (long m = g + 1; m <= m_max; ++m) {
    QR s = QR::one(1);
    bool have = false;
    auto it = pool.find(m);
    if (it != pool.end()) {
      s = it->second;
      pool.erase(it);
      have = true;
    } else {
      for (long a = g + 1; !have && 2 * a <= m; ++a) {
        long b = m - a;
        if (fam.f_.count(a) && fam.f_.count(b)) {
          s = fam.f_.at(a) * fam.f_.at(b);
          have = true;
        }
      }
    }
    if (!have)
      throw std::domain_error("generators insufficient to realize pole order " +
                              std::to_string(m));
    // clear echelon positions below m
    for (long j = m - 1; j >= g + 1; --j) {
      const Rational& cj = s.coeff(-j);
      if (cj != 0) s = s - fam.f_.at(j).scaled(cj);
    }
    // drop the constant
    const Rational& c0 = s.coeff(0);
    if (c0 != 0) s = s - QR::monomial(c0, 0, s.prec());
    if (s.low() != -m || s.leading_coeff() != 1)
      throw std::logic_error("echelon normalization failed at m = " + std::to_string(m));
    fam.f_.emplace(m, std::move(s));
  }
  fam.m_max_ = m_max;
  return fam;
}

BasisExpansion expand_in_basis(const QR& f, const BasisFamily& fam) {
  BasisExpansion out;
  QR s = f;
  long g = fam.genus();
  while (!s.is_zero() && s.low() < 0) {
    long p = -s.low();
    if (p <= g) break;  // leftover gap coefficients; flagged below
    if (p > fam.m_max())
      throw std::domain_error("expand_in_basis: pole order exceeds built family");
    Rational c = s.leading_coeff();
    out.cm[p] = c;
    s = s - fam.at(p).scaled(c);
  }
  out.c0 = s.is_zero() ? Rational(0) : s.coeff_q(Rational(0));
  if (out.c0 != 0) s = s - QR::monomial(out.c0, 0, s.prec());
  for (long e = s.low(); e < 0 && e < s.prec(); ++e) {
    if (s.coeff(e) != 0) {
      out.gap_ok = false;
      break;
    }
  }
  out.remainder = s;
  out.residual_zero = s.is_zero();
  return out;
}

QR hecke_J(long n, long prec) {
  if (n < 0) throw std::domain_error("hecke_J: n >= 0 required");
  if (n == 0) return QR::one(prec);
  // coefficients of J_1 = j - 744 up to q^{n * prec}
  long need = n * prec + 1;
  QR j1 = j_series(need);
  auto a = [&](long k) -> Rational {
    if (k == -1) return Rational(1);
    if (k == 0) return Rational(0);
    if (k < -1) return Rational(0);
    return j1.coeff(k);
  };
  std::vector<Rational> c(prec + n, Rational(0));
  // principal part q^{-n}, constant 0
  c[0] = 1;
  for (long m = 1; m < prec; ++m) {
    Rational s(0);
    for (long d : divisors(gcd(n, m))) s += Rational(n / d) * a(n * m / (d * d));
    c[m + n] = s;
  }
  return QR::from_coeffs(std::move(c), -n);
}

}  // namespace qmf
