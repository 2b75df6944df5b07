#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descartes/sign_pattern.hpp"

namespace descartes {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending order (index j holds the coefficient of x^j). Trailing zeros are
/// never stored, so the zero polynomial is the one with no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// prod (x - r) over the given roots.
  static Polynomial from_roots(std::span<const Rational> roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^j, zero outside [0, degree].
  Rational coeff(int j) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& leading() const;
  bool is_monic() const;
  /// Divides by the leading coefficient. Throws on the zero polynomial.
  Polynomial monic() const;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;
  /// Sign of p(x) without materializing p(x) for integer-friendly inputs.
  int sign_at(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending, space separated; "0" for the zero polynomial.
  std::string str() const;
  static Polynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws PreconditionViolated on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// m-th derivative; the zero polynomial once m exceeds the degree.
Polynomial derivative(const Polynomial& p, int m = 1);

/// (-1)^d p(-x): swaps positive and negative roots, keeps monic inputs monic.
Polynomial reflect(const Polynomial& p);

/// x^d p(1/x) / p(0): monic polynomial with reciprocal roots.
/// Throws ZeroConstantTerm if p(0) = 0.
Polynomial reverse(const Polynomial& p);

/// p(s x) for s != 0.
Polynomial rescale(const Polynomial& p, const Rational& s);

/// Quotient p / (x - r); throws NotARoot unless p(r) = 0 exactly.
Polynomial factor_out_root(const Polynomial& p, const Rational& r);

/// Odd and even parts: p = odd_part(p) + even_part(p).
Polynomial odd_part(const Polynomial& p);
Polynomial even_part(const Polynomial& p);

/// p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

/// Signs of the coefficients, leading to constant, after monic normalization.
/// Throws ZeroCoefficient(j) for the first (highest) vanishing a_j.
SignPattern sign_pattern_of(const Polynomial& p);

/// Polynomial whose coefficient of x^j is the sign of the pattern at x^j.
Polynomial pattern_template(const SignPattern& sp);

/// Integer-coefficient primitive associate with positive leading coefficient.
std::vector<Integer> primitive_integer(const Polynomial& p);

}  // namespace descartes
