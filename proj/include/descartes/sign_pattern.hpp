#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

/// Signs of the coefficients of a monic degree-d polynomial, listed from the
/// leading coefficient down to the constant term. The first sign is always +.
class SignPattern {
 public:
  SignPattern() = default;
  /// `signs` are +1/-1 from leading to constant; throws PreconditionViolated
  /// if empty, of length 1, or not starting with +1.
  explicit SignPattern(std::vector<std::int8_t> signs);

  /// Accepts "+-+++-+", "+,-,+" or "(+,-,+)"; whitespace is ignored.
  static SignPattern parse(std::string_view text);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  std::size_t size() const { return signs_.size(); }

  /// Sign at position i counted from the leading coefficient (i = 0 is x^d).
  int operator[](std::size_t i) const { return signs_[i]; }
  /// Sign of the coefficient of x^j.
  int sign_of_degree(int j) const { return signs_[static_cast<std::size_t>(degree() - j)]; }

  const std::vector<std::int8_t>& signs() const { return signs_; }

  /// Compact "+-+" rendering.
  std::string str() const;

  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

struct PosNegPair {
  int pos = 0;
  int neg = 0;
  friend auto operator<=>(const PosNegPair&, const PosNegPair&) = default;
  friend bool operator==(const PosNegPair&, const PosNegPair&) = default;
};

struct Couple {
  SignPattern pattern;
  PosNegPair pair;
  friend auto operator<=>(const Couple&, const Couple&) = default;
  friend bool operator==(const Couple&, const Couple&) = default;
  /// "PATTERN pos neg".
  std::string str() const;
  static Couple parse(std::string_view pattern, int pos, int neg);
};

struct ChangesPreservations {
  int changes = 0;
  int preservations = 0;
};

/// Interleaving of positive-root moduli (P) and negative-root moduli (N),
/// smallest modulus first.
class ModulusOrder {
 public:
  ModulusOrder() = default;
  explicit ModulusOrder(std::string tokens);

  const std::string& tokens() const { return tokens_; }
  int positives() const;
  int negatives() const;
  /// e.g. "b1 < a1 < b2 < b3 < a2"; a_k label positive moduli, b_k negative ones.
  std::string render() const;

  friend bool operator==(const ModulusOrder&, const ModulusOrder&) = default;

 private:
  std::string tokens_;
};

ChangesPreservations changes_preservations(const SignPattern& sp);

/// Descartes compatibility: pos <= c, c - pos even, neg <= p, p - neg even.
bool compatible(const SignPattern& sp, PosNegPair pair);

/// All compatible pairs, sorted lexicographically.
std::vector<PosNegPair> compatible_pairs(const SignPattern& sp);

/// Scan adjacent coefficient pairs from the constant term upwards; a change
/// contributes P, a preservation N.
ModulusOrder canonical_order(const SignPattern& sp);

/// Pattern of (-1)^d Q(-x): flips the signs at positions with d - j odd.
SignPattern reflect_pattern(const SignPattern& sp);
/// Pattern of x^d Q(1/x)/Q(0): read from the right, renormalized to start with +.
SignPattern reverse_pattern(const SignPattern& sp);

Couple reflect_couple(const Couple& couple);
Couple reverse_couple(const Couple& couple);

/// Orbit of a compatible couple under the two commuting involutions, sorted.
std::vector<Couple> z2z2_orbit(const Couple& couple);

/// 2a pluses, then b pairs (-,+), then 2c minuses. Degree 2a+2b+2c-1.
SignPattern make_D(int a, int b, int c);

struct DShape {
  int a = 0, b = 0, c = 0;
  friend bool operator==(const DShape&, const DShape&) = default;
};
std::optional<DShape> is_D(const SignPattern& sp);

/// (+,-,+,...,+,-,+) of degree d >= 4; throws DegreeTooSmall otherwise.
SignPattern sigma_bullet(int d);

/// Case 1) / Case 2) clauses for pos + neg = 2 and even degree.
bool case12_detect(const SignPattern& sp, PosNegPair pair);

/// All sign patterns of degree d (2^d of them), in lexicographic order.
std::vector<SignPattern> all_patterns(int d);

/// Number of pairs (pos, neg) >= 0 with pos + neg <= d and d - pos - neg even.
int pair_universe_size(int d);

}  // namespace descartes
