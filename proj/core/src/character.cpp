#include "qmf/character.hpp"

#include <sstream>
#include <stdexcept>

#include "qmf/arith.hpp"

namespace qmf {

namespace {

struct CyclicFactor {
  long gen;    // generator lifted mod u (== 1 on the other prime parts)
  long order;  // order of gen
};

long crt_lift(long r, long q, long u) {
  // x == r (mod q), x == 1 (mod u/q); gcd(q, u/q) = 1.
  long m = u / q;
  if (m == 1) return ((r % u) + u) % u;
  // x = r + q*t with r + q*t == 1 (mod m)
  long qinv = 1;
  for (long t = 0; t < m; ++t) {
    if ((q * t) % m == ((1 - r) % m + m) % m) {
      qinv = t;
      break;
    }
  }
  return ((r + q * qinv) % u + u) % u;
}

std::vector<CyclicFactor> unit_group_factors(long u) {
  std::vector<CyclicFactor> fs;
  for (auto [p, e] : factorize(u)) {
    long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        fs.push_back({crt_lift(3, q, u), 2});
      } else {
        fs.push_back({crt_lift(q - 1, q, u), 2});
        fs.push_back({crt_lift(5, q, u), q / 4});
      }
    } else {
      fs.push_back({crt_lift(primitive_root(q), q, u), euler_phi(q)});
    }
  }
  return fs;
}

}  // namespace

class CharacterBuilder {
 public:
  static std::vector<DirichletCharacter> build_all(long u) {
    std::vector<DirichletCharacter> out;
    if (u == 1) {
      DirichletCharacter chi;
      chi.u_ = 1;
      chi.expo_ = {0};
      chi.finish();
      out.push_back(chi);
      return out;
    }
    auto fs = unit_group_factors(u);
    // Discrete logs of every coprime residue with respect to each factor,
    // computed on the prime-power projections.
    std::vector<std::vector<long>> dlog(fs.size(), std::vector<long>(u, -1));
    auto fac = factorize(u);
    std::vector<long> qs;
    for (auto [p, e] : fac) {
      long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      qs.push_back(q);
    }
    size_t fi = 0;
    for (size_t pi = 0; pi < fac.size(); ++pi) {
      long p = fac[pi].first, q = qs[pi];
      if (p == 2 && fac[pi].second == 1) continue;
      if (p == 2 && fac[pi].second >= 3) {
        // factors fi (order 2, gen -1) and fi+1 (order q/4, gen 5)
        for (long a = 0; a < u; ++a) {
          if (gcd(a, u) != 1) continue;
          long am = a % q;
          long sgn = (am % 4 == 1) ? 0 : 1;
          long b = sgn ? (q - am) % q : am;  // now b is a power of 5 mod q
          long e5 = -1, x = 1;
          for (long k = 0; k < q / 4; ++k) {
            if (x == b) {
              e5 = k;
              break;
            }
            x = (x * 5) % q;
          }
          if (e5 < 0) throw std::logic_error("2-adic dlog failed");
          dlog[fi][a] = sgn;
          dlog[fi + 1][a] = e5;
        }
        fi += 2;
      } else {
        long g = (p == 2) ? 3 : primitive_root(q);
        long ordg = (p == 2) ? 2 : euler_phi(q);
        for (long a = 0; a < u; ++a) {
          if (gcd(a, u) != 1) continue;
          long am = a % q, e = -1, x = 1;
          for (long k = 0; k < ordg; ++k) {
            if (x == am) {
              e = k;
              break;
            }
            x = (x * g) % q;
          }
          if (e < 0) throw std::logic_error("dlog failed");
          dlog[fi][a] = e;
        }
        fi += 1;
      }
    }

    long M = 1;
    for (auto& f : fs) M = lcm(M, f.order);
    // Enumerate exponent tuples lexicographically.
    std::vector<long> t(fs.size(), 0);
    while (true) {
      DirichletCharacter chi;
      chi.u_ = u;
      chi.expo_.assign(u, -1);
      for (long a = 0; a < u; ++a) {
        if (gcd(a, u) != 1) continue;
        long k = 0;
        for (size_t i = 0; i < fs.size(); ++i)
          k = (k + t[i] * dlog[i][a] % M * (M / fs[i].order)) % M;
        chi.expo_[a] = ((k % M) + M) % M;
      }
      chi.order_ = M;
      chi.finish();
      out.push_back(chi);
      // next tuple
      size_t i = 0;
      while (i < fs.size()) {
        if (++t[i] < fs[i].order) break;
        t[i] = 0;
        ++i;
      }
      if (i == fs.size()) break;
    }
    return out;
  }
};

void DirichletCharacter::finish() {
  // Reduce the exponent table to the true order of the character.
  long g = order_;
  for (long a = 0; a < u_; ++a)
    if (expo_[a] > 0) g = gcd(g, expo_[a]);
  long ord = order_ / g;
  if (ord != order_) {
    for (long a = 0; a < u_; ++a)
      if (expo_[a] > 0) expo_[a] /= g;
  }
  order_ = ord == 0 ? 1 : ord;
  // Conductor: smallest d | u with chi trivial on {a == 1 mod d}.
  conductor_ = u_;
  for (long d : divisors(u_)) {
    bool ok = true;
    for (long a = 0; a < u_ && ok; ++a) {
      if (expo_[a] < 0) continue;
      if (a % d == 1 % d && expo_[a] != 0) ok = false;
    }
    if (ok) {
      conductor_ = d;
      break;
    }
  }
}

bool DirichletCharacter::is_odd() const {
  if (u_ == 1) return false;
  long e = expo_[u_ - 1];
  return e >= 0 && 2 * e == order_;
}

long DirichletCharacter::value_exponent(long a) const {
  a %= u_;
  if (a < 0) a += u_;
  return expo_[a];
}

Cyc DirichletCharacter::value(long a) const {
  long e = value_exponent(a);
  if (e < 0) return Cyc(Rational(0));
  return Cyc::zeta(order_, e);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter chi = *this;
  for (long a = 0; a < u_; ++a)
    if (chi.expo_[a] > 0) chi.expo_[a] = order_ - chi.expo_[a];
  return chi;
}

std::vector<DirichletCharacter> DirichletCharacter::all_characters(long u) {
  return CharacterBuilder::build_all(u);
}

std::vector<DirichletCharacter> DirichletCharacter::primitive_characters(long u) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : all_characters(u))
    if (chi.is_primitive()) out.push_back(chi);
  return out;
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  os << "chi(mod " << u_ << ", order " << order_ << ")";
  return os.str();
}

Cyc gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::domain_error("gauss_sum requires a primitive character");
  long u = chi.modulus();
  Cyc g(Rational(0));
  for (long a = 0; a < u; ++a) {
    long e = chi.value_exponent(a);
    if (e < 0) continue;
    g += Cyc::zeta(chi.order(), e) * Cyc::zeta(u, a);
  }
  return g;
}

Cyc inv_one_minus_cos(long d, long u) {
  if (u < 3) throw std::domain_error("inv_one_minus_cos requires u >= 3");
  if (d % u == 0) throw std::domain_error("inv_one_minus_cos pole: u | d");
  Cyc one(Rational(1));
  Cyc x = (one - Cyc::zeta(u, d)) * (one - Cyc::zeta(u, -d));
  return Cyc(Rational(2)) * x.inv();
}

}  // namespace qmf
