#pragma once

// Integer-coefficient helpers shared by the gcd and Sturm code.

#include <gmpxx.h>

#include <vector>

namespace descartes::detail {

using IntPoly = std::vector<mpz_class>;  // ascending, no trailing zeros

/// Pseudo-remainder of a by b, scaled by |lc(b)|^k so that it is a positive
/// multiple of the true remainder.
inline IntPoly positive_prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lc = b.back();
  const mpz_class alc = abs(lc);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class f = sgn(lc) > 0 ? mpz_class(a.back()) : mpz_class(-a.back());
    for (auto& c : a) c *= alc;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

/// Divides by the positive content; signs are preserved.
inline void remove_content(IntPoly& v) {
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Sign of v(num/den) for den > 0, by homogeneous Horner.
inline int sign_at(const IntPoly& v, const mpz_class& num, const mpz_class& den) {
  if (v.empty()) return 0;
  mpz_class acc = v.back();
  mpz_class dp = 1;
  for (std::size_t j = v.size() - 1; j-- > 0;) {
    dp *= den;
    acc *= num;
    acc += v[j] * dp;
  }
  return sgn(acc);
}

}  // namespace descartes::detail
