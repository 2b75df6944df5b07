#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descartes/polynomial.hpp"

namespace descartes {

/// Open interval (lo, hi) with rational endpoints, lo < hi.
struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Region selector for sturm_count.
struct Region {
  std::optional<Rational> lo;  // nullopt: -infinity
  std::optional<Rational> hi;  // nullopt: +infinity
  static Region whole_line() { return {}; }
  static Region positive() { return {Rational(0), std::nullopt}; }
  static Region negative() { return {std::nullopt, Rational(0)}; }
  static Region open(const Interval& iv) { return {iv.lo, iv.hi}; }
};

/// Exact real-root census of a nonzero polynomial.
struct RootProfile {
  int pos = 0;            // distinct positive roots
  int neg = 0;            // distinct negative roots
  int pos_mult = 0;       // positive roots counted with multiplicity
  int neg_mult = 0;       // negative roots counted with multiplicity
  int zero_mult = 0;      // multiplicity of the root 0
  int complex_pairs = 0;  // non-real conjugate pairs, with multiplicity
  bool all_simple = true; // every real root is simple
  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

/// Sturm chain of the squarefree part of a polynomial, kept with integer
/// coefficients (content removed at every step).
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Sign variations at x (zeros skipped).
  int variations(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Number of distinct roots in (a, b]; exact for any a < b.
  int count_half_open(const Rational& a, const Rational& b) const;
  /// Number of distinct roots in the selected open region.
  int count(const Region& region) const;

  /// Sign of the squarefree part at x.
  int sign_at(const Rational& x) const;
  const Polynomial& squarefree() const { return squarefree_; }

 private:
  Polynomial squarefree_;
  std::vector<std::vector<Integer>> chain_;
};

/// Number of distinct real roots of p in the selected region.
int sturm_count(const Polynomial& p, const Region& region);

RootProfile root_profile(const Polynomial& p);

/// Cauchy bound 1 + max|a_j / a_d| rounded up to a power of two.
Rational root_bound(const Polynomial& p);

/// Disjoint isolating intervals, one per distinct real root, in increasing
/// order. When `max_width` is given every interval is refined below it.
std::vector<Interval> isolate_real_roots(const Polynomial& p,
                                         const std::optional<Rational>& max_width = std::nullopt);

/// Shrinks an isolating interval of a root of `seq`'s polynomial until its
/// width is below `max_width`. Endpoints stay non-roots.
Interval refine(const SturmSequence& seq, Interval iv, const Rational& max_width);

/// One group of real roots sharing a modulus (|r| equal), in modulus order.
struct ModulusClass {
  Interval modulus;          // isolates the common modulus; lo >= 0
  bool has_positive = false; // contains a positive root
  bool has_negative = false; // contains a negative root
  bool is_zero = false;      // the root 0
};

/// Real roots of p grouped by modulus, sorted ascending, with intervals
/// refined until distinct moduli are separated. Ties (r and -r both roots)
/// are detected exactly through gcd(p(x), p(-x)).
std::vector<ModulusClass> modulus_classes(const Polynomial& p);

/// Tokens of the real roots in increasing modulus: 'P' positive, 'N'
/// negative, '0' zero; equal moduli are joined by '=' (e.g. "N=P").
std::string modulus_signature(const Polynomial& p);

}  // namespace descartes
