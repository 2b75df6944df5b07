#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descartes/polynomial.hpp"
#include "descartes/roots.hpp"
#include "descartes/sign_pattern.hpp"

namespace descartes {

/// Geometric ladders standing in for "epsilon small enough" and "0 < eta << epsilon".
struct BlendSchedule {
  Rational eps_start{1, 4};
  Rational eta_start{1, 4};   // relative to epsilon inside the family drivers
  Rational shrink{1, 2};
  int max_steps = 200;
};

/// Monic hyperbolic polynomial with simple nonzero roots, sign pattern sp and
/// moduli interleaved as canonical_order(sp) prescribes.
Polynomial realize_hyperbolic_canonical(const SignPattern& sp);
/// The roots used by realize_hyperbolic_canonical, ascending in modulus.
std::vector<Rational> hyperbolic_canonical_roots(const SignPattern& sp);

/// base + eta * tmpl for the largest eta on the ladder eta_start * shrink^k
/// (k < max_steps) whose monic normalization realizes target.
Polynomial blend(const Polynomial& base, const Couple& target, const BlendSchedule& schedule,
                 const Polynomial& tmpl);

/// Family driver: for epsilon on the ladder, family(epsilon) must already have
/// the target's real-root data; then an eta ladder relative to epsilon is tried.
/// `accept` adds a further condition on the monic candidate.
Polynomial blend_family(const std::function<Polynomial(const Rational&)>& family, const Couple& target,
                        const BlendSchedule& schedule, const Polynomial& tmpl,
                        const std::function<bool(const Polynomial&)>& accept = nullptr);

/// Two positive and one negative simple real root.
Polynomial realize_21(const SignPattern& sp, const BlendSchedule& schedule = {});

/// Relative position of beta = |negative root| and alpha1 < alpha2.
enum class Order21 { B_A1_A2, Beq_A1_A2, A1_B_A2, A1_A2eqB, A1_A2_B };
std::string to_string(Order21 o);
Order21 parse_order21(const std::string& s);
/// Modulus signature that a realization with the given order must have.
std::string order21_signature(Order21 o);

/// x^d - A x^{2m} - B x^{2n-1} + C with a double root at 1 and a root at -1.
Polynomial order21_base(int d, int m, int n);

Polynomial realize_21_with_order(const SignPattern& sp, Order21 order, const BlendSchedule& schedule = {});

/// Three positive simple real roots; throws IsDPattern on D(a,b,c).
Polynomial realize_30(const SignPattern& sp, const BlendSchedule& schedule = {});

enum class CollisionBranch { upper_pair_collides, lower_pair_collides, both_collide };
std::string to_string(CollisionBranch b);

struct DisconnectWitness {
  Polynomial q1;  // moduli: negatives below both positives
  Polynomial q2;  // moduli: both positives below the negatives
  int d = 0;
  Interval t0_bracket;
  CollisionBranch branch = CollisionBranch::lower_pair_collides;
  Polynomial start;  // hyperbolic starting polynomial
};

/// Two realizations of (sigma_bullet(d), (2, d-4)) with opposite modulus
/// interleavings, obtained from the homotopy Q*(x) + t x^2 prod(x + beta_i).
DisconnectWitness disconnect_pair(int d, const BlendSchedule& schedule = {});

/// Resolves a simultaneous double-root collision at a < b by
/// q -+ eps (x - (a+b)/2); returns {Q-, Q+}.
std::pair<Polynomial, Polynomial> split_double_collision(const Polynomial& q, const Rational& a,
                                                         const Rational& b, const BlendSchedule& schedule = {});

/// Expected modulus signatures of q1 and q2 for degree d.
std::string disconnect_signature_q1(int d);
std::string disconnect_signature_q2(int d);

struct ObstructionReport {
  int d = 0;
  std::vector<int> even_degrees;  // descending
  std::vector<int> signs;         // sign of the coefficient at each even degree
  bool holds = false;             // all even coefficients positive, so p(1) + p(-1) > 0
};

/// For even d: no polynomial with pattern sigma_bullet(d) vanishes at both 1 and -1.
ObstructionReport obstruction_check(int d);

struct SignDeduction {
  std::string name;
  bool holds = false;
};

struct SignDeductionReport {
  Polynomial quotient;             // U = p / (x + delta)
  std::vector<SignDeduction> deductions;
  int quotient_negative_roots = 0;
  bool full_pattern_checked = false;
  bool all_hold = false;
};

/// Divides p by (x + delta) and checks the forced signs of the quotient.
SignDeductionReport odd_obstruction_step(const Polynomial& p, const Rational& delta);

struct OddObstructionCase {
  Polynomial p;
  Rational delta;
};

/// Deterministic inputs for odd_obstruction_step: p = (x + delta) U with U of
/// pattern sigma_bullet(d-1), two positive, d-5 negative roots and one complex pair.
OddObstructionCase odd_obstruction_sample(int d, std::uint64_t seed);

}  // namespace descartes
