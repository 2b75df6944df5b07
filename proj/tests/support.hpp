#pragma once

// Seeded generators and independent oracles shared by the unit, property and
// acceptance tests. Oracles avoid the library's root machinery on purpose.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "descartes/polynomial.hpp"
#include "descartes/roots.hpp"
#include "descartes/sign_pattern.hpp"

namespace testsupport {

using descartes::Integer;
using descartes::Polynomial;
using descartes::Rational;
using descartes::RootProfile;
using descartes::SignPattern;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // uniform in [lo, hi]
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return gen_() & 1; }
  Rational ratio(long num_max, long den_max) {
    Rational q(Integer(range(1, num_max)), Integer(range(1, den_max)));
    q.canonicalize();
    return q;
  }
  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// A product of linear and quadratic factors together with the root data it was built from.
struct Factored {
  Polynomial p;
  RootProfile expected;
};

inline Polynomial linear(const Rational& root) { return Polynomial{Rational(-root), Rational(1)}; }

// Degree <= max_d; distinct positive and negative roots with random
// multiplicities, an optional zero root and irreducible quadratics.
inline Factored random_factored(Rng& rng, int max_d) {
  Factored f;
  f.p = Polynomial::constant(1);
  int budget = static_cast<int>(rng.range(1, max_d));
  std::set<Rational> used;
  auto fresh = [&](int sign) {
    for (;;) {
      Rational r = rng.ratio(40, 8) * sign;
      if (used.insert(r).second) return r;
    }
  };
  while (budget > 0) {
    const long kind = rng.range(0, 9);
    if (kind <= 3) {  // positive root
      const int mult = static_cast<int>(std::min<long>(budget, rng.range(0, 5) == 0 ? 2 : 1));
      const Rational r = fresh(1);
      for (int i = 0; i < mult; ++i) f.p = f.p * linear(r);
      ++f.expected.pos;
      f.expected.pos_mult += mult;
      if (mult > 1) f.expected.all_simple = false;
      budget -= mult;
    } else if (kind <= 6) {  // negative root
      const int mult = static_cast<int>(std::min<long>(budget, rng.range(0, 5) == 0 ? 2 : 1));
      const Rational r = fresh(-1);
      for (int i = 0; i < mult; ++i) f.p = f.p * linear(r);
      ++f.expected.neg;
      f.expected.neg_mult += mult;
      if (mult > 1) f.expected.all_simple = false;
      budget -= mult;
    } else if (kind <= 8 && budget >= 2) {  // x^2 + b x + c with b^2 < 4c
      const Rational c = rng.ratio(30, 4);
      Rational b = rng.ratio(10, 7);
      while (b * b >= 4 * c) b /= 2;
      if (rng.coin()) b = -b;
      f.p = f.p * Polynomial{c, b, Rational(1)};
      ++f.expected.complex_pairs;
      budget -= 2;
    } else if (f.expected.zero_mult == 0 && rng.range(0, 3) == 0) {
      f.p = f.p * Polynomial{Rational(0), Rational(1)};
      f.expected.zero_mult = 1;
      --budget;
    }
  }
  return f;
}

// Descartes sign changes of the nonzero coefficients.
inline int sign_changes(const Polynomial& p) {
  int changes = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of pairs (pos, neg) by brute enumeration.
inline int count_pairs_bruteforce(int d) {
  int n = 0;
  for (int pos = 0; pos <= d; ++pos)
    for (int neg = 0; pos + neg <= d; ++neg)
      if ((d - pos - neg) % 2 == 0) ++n;
  return n;
}

// n! / (n-m)! with arbitrary precision.
inline Integer falling(int n, int m) {
  Integer r = 1;
  for (int i = 0; i < m; ++i) r *= (n - i);  // hits the factor 0 once m > n
  return r;
}

// D patterns of degree d by direct construction over a + b + c = (d + 1) / 2.
inline std::vector<SignPattern> d_patterns_bruteforce(int d) {
  std::vector<SignPattern> out;
  const int s = (d + 1) / 2;
  for (int a = 1; a < s; ++a)
    for (int b = 1; a + b < s; ++b) {
      const int c = s - a - b;
      std::vector<std::int8_t> v;
      for (int i = 0; i < 2 * a; ++i) v.push_back(1);
      for (int i = 0; i < b; ++i) {
        v.push_back(-1);
        v.push_back(1);
      }
      for (int i = 0; i < 2 * c; ++i) v.push_back(-1);
      out.emplace_back(v);
    }
  return out;
}

// Counts sign changes of p along a fine rational grid on [lo, hi]; a lower
// bound on the number of odd-multiplicity roots there, exact for well-separated roots.
inline int grid_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi, int steps) {
  int changes = 0, last = 0;
  for (int i = 0; i <= steps; ++i) {
    const int s = p.sign_at(lo + (hi - lo) * i / steps);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace testsupport
