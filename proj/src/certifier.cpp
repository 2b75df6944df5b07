#include "descartes/certifier.hpp"

#include "descartes/error.hpp"

namespace descartes {

RealizationReport verify_realization(const Polynomial& p, const Couple& couple) {
  RealizationReport r;
  r.couple = couple;
  r.witness = p;
  auto add = [&](const char* name, bool ok) { r.checks.push_back({name, ok}); };

  add("monic", p.is_monic());
  bool nonzero = p.degree() >= 1;
  for (const auto& c : p.coeffs()) nonzero = nonzero && c != 0;
  add("nonzero_coeffs", nonzero);

  bool pattern = false;
  if (nonzero) {
    try {
      pattern = sign_pattern_of(p) == couple.pattern;
    } catch (const ZeroCoefficient&) {
    }
  }
  add("pattern_match", pattern);

  if (p.is_zero()) {
    add("pos_count", false);
    add("neg_count", false);
    add("all_simple", false);
  } else {
    const RootProfile prof = root_profile(p);
    r.profile = prof;
    add("pos_count", prof.pos == couple.pair.pos && prof.pos_mult == couple.pair.pos);
    add("neg_count", prof.neg == couple.pair.neg && prof.neg_mult == couple.pair.neg);
    add("all_simple", prof.all_simple && prof.zero_mult == 0);
  }
  r.verified = true;
  for (const auto& c : r.checks) r.verified = r.verified && c.passed;
  return r;
}

bool realizes(const Polynomial& p, const Couple& couple) {
  // cheap rejections before the root census
  if (!p.is_monic() || p.degree() != couple.pattern.degree()) return false;
  try {
    if (sign_pattern_of(p) != couple.pattern) return false;
  } catch (const ZeroCoefficient&) {
    return false;
  }
  return verify_realization(p, couple).verified;
}

std::uint64_t falling_factorial(int n, int m) {
  if (m < 0) throw PreconditionViolated("falling factorial needs m >= 0");
  if (n < 0 || m > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

DbisCertificate dbis_certificate(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionViolated("dbis_certificate needs a, b, c >= 1");
  DbisCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.d = 2 * a + 2 * b + 2 * c - 1;
  if (cert.d > 20) throw PreconditionViolated("dbis_certificate supports d <= 20");
  cert.deg_u = 2 * b + 2 * c + 1;
  cert.deg_v = 2 * b + 2 * c - 1;
  cert.deg_w = 2 * c;
  cert.deg_t = 2 * c - 2;
  cert.verdict = true;
  for (int m = 1; m <= cert.d; ++m) {
    DbisRow row;
    row.m = m;
    row.u = falling_factorial(cert.deg_u, m);
    row.v = falling_factorial(cert.deg_v, m);
    row.w = falling_factorial(cert.deg_w, m);
    row.t = falling_factorial(cert.deg_t, m);
    if (m <= cert.deg_u) {
      // (u-v)E + (w-t)G + (v-t) with E >= 1, G >= 0 is at least u - t
      row.passed = row.u > row.v && row.w >= row.t && row.v >= row.t && row.u > row.t;
    } else {
      row.uses_monic_term = true;
      row.monic_term = falling_factorial(cert.d, m);
      row.passed = row.monic_term > 0;
    }
    cert.verdict = cert.verdict && row.passed;
    cert.rows.push_back(row);
  }
  return cert;
}

namespace {

void require_two_real(const SignPattern& sp, PosNegPair pair) {
  if (pair.pos + pair.neg != 2) throw PreconditionViolated("pos + neg must equal 2");
  if (sp.degree() % 2 != 0) throw PreconditionViolated("degree must be even");
  if (!compatible(sp, pair)) throw PreconditionViolated("couple is not compatible");
}

}  // namespace

bool theorem2_realizable(const SignPattern& sp, PosNegPair pair) {
  require_two_real(sp, pair);
  return !case12_detect(sp, pair);
}

std::string to_string(RatioRegion r) {
  switch (r) {
    case RatioRegion::all_except_one: return "all_except_one";
    case RatioRegion::any_ratio: return "any_ratio";
    case RatioRegion::lt_one: return "lt_one";
    case RatioRegion::gt_one: return "gt_one";
  }
  return "?";
}

RatioRegion theorem2_ratio_region(const SignPattern& sp, PosNegPair pair) {
  require_two_real(sp, pair);
  if (case12_detect(sp, pair)) throw PreconditionViolated("couple is not realizable");
  if (sp.sign_of_degree(0) > 0) return RatioRegion::all_except_one;
  bool any_pos = false, any_neg = false;
  for (int j = 1; j <= sp.degree(); j += 2) (sp.sign_of_degree(j) > 0 ? any_pos : any_neg) = true;
  if (any_pos && any_neg) return RatioRegion::any_ratio;
  return any_pos ? RatioRegion::lt_one : RatioRegion::gt_one;
}

std::string to_string(SurveyStatus s) {
  switch (s) {
    case SurveyStatus::realized_constructive: return "realized_constructive";
    case SurveyStatus::realized_search: return "realized_search";
    case SurveyStatus::impossible_certified: return "impossible_certified";
    case SurveyStatus::unresolved: return "unresolved";
  }
  return "?";
}

}  // namespace descartes
