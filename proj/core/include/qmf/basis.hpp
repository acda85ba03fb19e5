#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/modcurve.hpp"
#include "qmf/qexpansions.hpp"

namespace qmf {

// Orbit trace of a generalized eta quotient: the members are the exponent
// maps of f|gamma over coset representatives, each optionally multiplied by
// a root of unity zeta_den^num (default 1).
struct TraceSpec {
  std::vector<std::map<long, int>> members;
  std::vector<std::pair<long, long>> multipliers;  // (num, den) per member
};

struct SeedSpec {
  long low = 0;
  std::vector<Rational> coeffs;
  std::string provenance;
};

struct GeneratorSpec {
  enum class Kind { Eta, Trace, Seed, JMinus744 };
  Kind kind = Kind::Eta;
  EtaQuotient eta;
  TraceSpec trace;
  SeedSpec seed;
};

struct OrderTable {
  std::vector<std::string> row_names;     // available functions
  std::vector<std::string> col_names;     // cusps
  std::vector<std::vector<long>> orders;  // rows x cols
};

struct LevelConfig {
  long level = 1;
  long genus_hint = 0;
  long precision = 80;
  std::vector<GeneratorSpec> generators;
  std::optional<OrderTable> order_table;
};

LevelConfig parse_level_config(const std::string& json_text);

// Yang's congruence conditions (i)-(iii) on an exponent map a -> r_a with
// the indices taken as written: sum r_a == 0 (12), sum a r_a == 0 (2),
// sum a^2 r_a == 0 (2N).
bool check_yang_conditions(const std::map<long, int>& r, long N,
                           std::string* diagnostics = nullptr);

// Sum of the member expansions (times their root-of-unity multipliers).
// Coefficients must come out rational; anything else is an error.
QR orbit_trace(const TraceSpec& spec, long N, long prec);

// Bounded exhaustive search for an integer exponent vector x with
//   sum_i x_i orders[i][marked_col] == -target
//   sum_i x_i orders[i][c]         >= -target   (all other columns c)
// Returns the lexicographically smallest solution in [box_lo, box_hi]^rows.
std::vector<long> exponent_search(const std::vector<std::vector<long>>& orders,
                                  size_t marked_col, long target,
                                  long box_lo, long box_hi);

// The reduced-row-echelon family f_{N,m} = q^{-m} + gap terms + O(q).
class BasisFamily {
 public:
  long level() const { return N_; }
  long genus() const { return g_; }
  long m_max() const { return m_max_; }

  // f_{N,m}; m = 0 gives the constant 1.
  const QR& at(long m) const;
  // Coefficient a_N(m, n) of q^n in f_{N,m}; exact, throws past precision.
  Rational a(long m, long n) const;

  // Weight-2 dual g_{N,-ell} = q^ell + sum_m (-a_N(m,-ell)) q^m, ell in 0..g.
  QR dual(long ell, long prec) const;

 private:
  long N_ = 1;
  long g_ = 0;
  long m_max_ = 0;
  std::map<long, QR> f_;
  mutable QR one_;
  friend BasisFamily build_basis(const LevelConfig&, long, long);
};

BasisFamily build_basis(const LevelConfig& cfg, long m_max, long prec);

struct BasisExpansion {
  std::map<long, Rational> cm;  // coefficients of f_{N,m}, m >= g+1
  Rational c0;                  // constant part
  QR remainder;                 // f - sum cm f_m - c0, on the known window
  bool gap_ok = true;           // no leftover negative-exponent coefficients
  bool residual_zero = true;    // remainder vanishes to precision
};

// Principal-part matching of f against the family.  For genuine modular
// inputs the remainder must vanish identically (exact zero, no tolerance).
BasisExpansion expand_in_basis(const QR& f, const BasisFamily& fam);

// Level-1 Hecke image J_n = (j - 744)|T(n), normalized to q^{-n} + O(q).
QR hecke_J(long n, long prec);

}  // namespace qmf
