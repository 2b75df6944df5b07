#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descartes/polynomial.hpp"
#include "descartes/roots.hpp"
#include "descartes/sign_pattern.hpp"

namespace descartes {

struct NamedCheck {
  std::string name;
  bool passed = false;
};

/// Outcome of checking that a polynomial realizes a couple.
struct RealizationReport {
  Couple couple;
  Polynomial witness;
  std::vector<NamedCheck> checks;  // monic, nonzero_coeffs, pattern_match, pos_count, neg_count, all_simple
  bool verified = false;
  std::optional<RootProfile> profile;
};

/// Exact check of every realization condition; failures are reported, never thrown.
RealizationReport verify_realization(const Polynomial& p, const Couple& couple);
/// Shorthand for verify_realization(p, couple).verified.
bool realizes(const Polynomial& p, const Couple& couple);

/// One row of the falling-factorial certificate.
struct DbisRow {
  int m = 0;
  std::uint64_t u = 0, v = 0, w = 0, t = 0;  // falling factorials at 1 for the four degrees
  std::uint64_t monic_term = 0;               // d!/(d-m)!, used once m exceeds the largest degree
  bool uses_monic_term = false;
  bool passed = false;
};

/// Certificate that (D(a,b,c), (2j+1,0)) admits no realization: every
/// derivative of the normalized polynomial stays positive at 1.
struct DbisCertificate {
  int a = 0, b = 0, c = 0, d = 0;
  int deg_u = 0, deg_v = 0, deg_w = 0, deg_t = 0;
  std::vector<DbisRow> rows;
  bool verdict = false;
};

/// Falling factorial n (n-1) ... (n-m+1); zero when m > n.
std::uint64_t falling_factorial(int n, int m);

/// Valid for a, b, c >= 1 with 2a+2b+2c-1 <= 20.
DbisCertificate dbis_certificate(int a, int b, int c);

/// Realizability of a pair with pos + neg = 2 in even degree.
bool theorem2_realizable(const SignPattern& sp, PosNegPair pair);

enum class RatioRegion { all_except_one, any_ratio, lt_one, gt_one };
std::string to_string(RatioRegion r);

/// Admissible ratios alpha/beta of the two real-root moduli.
RatioRegion theorem2_ratio_region(const SignPattern& sp, PosNegPair pair);

/// Seeded search over products of random linear and quadratic factors.
/// Deterministic for a given seed; the result always realizes the couple.
std::optional<Polynomial> random_search(const Couple& couple, std::int64_t budget, std::uint64_t seed);

enum class SurveyStatus { realized_constructive, realized_search, impossible_certified, unresolved };
std::string to_string(SurveyStatus s);

struct SurveyEntry {
  Couple couple;
  SurveyStatus status = SurveyStatus::unresolved;
  std::optional<Polynomial> witness;
  std::string method;                        // how the status was reached
  std::optional<DbisCertificate> dbis;       // for D-pattern impossibility
  std::optional<std::string> certificate;    // textual certificate for other impossibility proofs
};

struct SurveyOptions {
  std::int64_t budget = 100000;
  std::uint64_t seed = 0;
  int cap = 8;
  int threads = 0;                 // 0: REALIZER_THREADS or hardware concurrency
  bool use_pair_theorem = true;    // apply the pos+neg=2 cases as impossibility certificates
};

/// Resolves one compatible couple the way survey does, using its orbit.
SurveyEntry resolve_couple(const Couple& couple, const SurveyOptions& options = {});

/// Status of every compatible couple of degree d, in couple order.
std::vector<SurveyEntry> survey(int d, const SurveyOptions& options = {});

}  // namespace descartes
