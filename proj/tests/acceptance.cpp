// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/lowdeg.hpp"
#include "descartes/realizer.hpp"
#include "support.hpp"

using namespace descartes;
using testsupport::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

unsigned worker_count() {
  if (const char* env = std::getenv("REALIZER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, n) on a small pool; body must be thread safe.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned k = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  for (unsigned t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

int run(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) out.fail("runtime " + std::to_string(secs) + " s over " + std::to_string(limit_seconds) + " s");
  std::printf("criterion %d %-34s %s  %8.2f s  %s\n", id, title.c_str(), out.pass ? "PASS" : "FAIL", secs,
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

std::string repeat(char c, int n) { return std::string(static_cast<std::size_t>(n), c); }

// --- 1
void descartes_soundness(Outcome& out) {
  Rng rng(20240601);
  int zero_coeff = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto f = testsupport::random_factored(rng, 10);
    const RootProfile prof = root_profile(f.p);
    if (!(prof == f.expected)) {
      out.fail("profile mismatch on " + f.p.str());
      continue;
    }
    const int c = testsupport::sign_changes(f.p);
    const int p = testsupport::sign_changes(reflect(f.p));
    out.require(prof.pos_mult <= c && (c - prof.pos_mult) % 2 == 0, "positive bound on " + f.p.str());
    out.require(prof.neg_mult <= p && (p - prof.neg_mult) % 2 == 0, "negative bound on " + f.p.str());
    for (const auto& a : f.p.coeffs()) zero_coeff += a == 0 ? 1 : 0;
  }
  out.detail << "10000 polynomials, " << zero_coeff << " vanishing coefficients seen";
}

// --- 2
void component_count(Outcome& out) {
  for (int d = 1; d <= 12; ++d) {
    const int formula = (d / 2 + 1) * ((d + 1) / 2 + 1);
    out.require(pair_universe_size(d) == formula, "d=" + std::to_string(d));
    out.require(testsupport::count_pairs_bruteforce(d) == formula, "oracle d=" + std::to_string(d));
  }
  out.detail << "d=1..12";
}

// --- 3
void disconnection(Outcome& out) {
  std::vector<std::string> lines(5);
  std::vector<char> ok(5, 1);
  parallel_for(5, [&](std::size_t i) {
    const int d = 6 + static_cast<int>(i);
    try {
      const DisconnectWitness w = disconnect_pair(d);
      const Couple target{sigma_bullet(d), {2, d - 4}};
      const std::string s1 = modulus_signature(w.q1), s2 = modulus_signature(w.q2);
      ok[i] = verify_realization(w.q1, target).verified && verify_realization(w.q2, target).verified &&
              s1 == repeat('N', d - 4) + "PP" && s2 == "PP" + repeat('N', d - 4);
      lines[i] = "d=" + std::to_string(d) + " " + s1 + "/" + s2;
    } catch (const std::exception& e) {
      ok[i] = 0;
      lines[i] = "d=" + std::to_string(d) + " threw " + e.what();
    }
  });
  for (std::size_t i = 0; i < 5; ++i) out.require(ok[i], lines[i]);
  for (int d : {6, 8, 10}) {
    const ObstructionReport r = obstruction_check(d);
    bool all_positive = true;
    for (int s : r.signs) all_positive = all_positive && s > 0;
    out.require(r.holds && all_positive && static_cast<int>(r.even_degrees.size()) == d / 2 + 1,
                "obstruction d=" + std::to_string(d));
  }
  int odd_cases = 0;
  for (int d : {7, 9, 11})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const OddObstructionCase c = odd_obstruction_sample(d, seed);
      const SignDeductionReport r = odd_obstruction_step(c.p, c.delta);
      out.require(r.all_hold && r.quotient * Polynomial{c.delta, Rational(1)} == c.p,
                  "odd step d=" + std::to_string(d));
      ++odd_cases;
    }
  for (const auto& l : lines) out.detail << l << " ";
  out.detail << "odd cases " << odd_cases;
}

// --- 4
void three_positive_roots(Outcome& out) {
  for (int d : {5, 7, 9, 11}) {
    std::vector<SignPattern> todo;
    std::set<SignPattern> d_forms;
    for (const auto& sp : all_patterns(d)) {
      if (!compatible(sp, {3, 0})) continue;
      if (is_D(sp)) {
        d_forms.insert(sp);
        continue;
      }
      todo.push_back(sp);
    }
    const auto oracle = testsupport::d_patterns_bruteforce(d);
    out.require(d_forms == std::set<SignPattern>(oracle.begin(), oracle.end()), "D set d=" + std::to_string(d));
    if (d == 11) out.require(d_forms.size() == 10, "d=11 excludes " + std::to_string(d_forms.size()));
    std::atomic<int> failures{0};
    std::vector<std::string> first(todo.size());
    parallel_for(todo.size(), [&](std::size_t i) {
      try {
        if (!verify_realization(realize_30(todo[i]), {todo[i], {3, 0}}).verified) {
          ++failures;
          first[i] = todo[i].str();
        }
      } catch (const std::exception& e) {
        ++failures;
        first[i] = todo[i].str() + " " + e.what();
      }
    });
    for (const auto& f : first) out.require(f.empty(), f);
    out.detail << "d=" << d << ": " << todo.size() << " realized, " << d_forms.size() << " D excluded; ";
    if (failures > 0) out.detail << failures << " failures; ";
  }
}

// --- 5
void d_pattern_certificates(Outcome& out) {
  int certs = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        if (2 * (a + b + c) - 1 > 15) continue;
        out.require(dbis_certificate(a, b, c).verdict, "dbis " + std::to_string(a) + std::to_string(b) + std::to_string(c));
        ++certs;
      }
  std::vector<Couple> couples;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        if (2 * (a + b + c) - 1 > 9) continue;
        const SignPattern sp = make_D(a, b, c);
        for (int k = 3; compatible(sp, {k, 0}); k += 2) couples.push_back({sp, {k, 0}});
      }
  std::vector<std::string> found(couples.size());
  parallel_for(couples.size(), [&](std::size_t i) {
    if (auto p = random_search(couples[i], 100000, 17 + i)) found[i] = couples[i].str() + " by " + p->str();
  });
  for (const auto& f : found) out.require(f.empty(), "search realized " + f);
  out.detail << certs << " certificates, " << couples.size() << " couples searched at budget 1e5";
}

// --- 6
void order_suite(Outcome& out) {
  Rng rng(6);
  std::set<SignPattern> both, odd_pos, even_pos;
  while (both.size() < 20 || odd_pos.size() < 20 || even_pos.size() < 20) {
    const int d = 3 + 2 * static_cast<int>(rng.range(0, 3));
    std::vector<std::int8_t> v{1};
    for (int i = 0; i < d; ++i) v.push_back(rng.coin() ? 1 : -1);
    const SignPattern sp(v);
    if (!compatible(sp, {2, 1})) continue;
    bool neg_even = false, neg_odd = false;
    for (int j = 0; j < d; ++j)
      if (sp.sign_of_degree(j) < 0) (j % 2 == 0 ? neg_even : neg_odd) = true;
    auto& bucket = neg_even && neg_odd ? both : neg_even ? odd_pos : even_pos;
    if (bucket.size() < 20) bucket.insert(sp);
  }
  const std::vector<Order21> orders{Order21::B_A1_A2, Order21::Beq_A1_A2, Order21::A1_B_A2, Order21::A1_A2eqB,
                                    Order21::A1_A2_B};
  struct Job {
    SignPattern sp;
    Order21 order;
    bool expect_ok;
  };
  std::vector<Job> jobs;
  for (const auto& sp : both)
    for (Order21 o : orders) jobs.push_back({sp, o, true});
  for (const auto& sp : odd_pos)
    for (Order21 o : orders) jobs.push_back({sp, o, o == Order21::B_A1_A2});
  for (const auto& sp : even_pos)
    for (Order21 o : orders) jobs.push_back({sp, o, o == Order21::A1_A2_B});
  std::vector<std::string> bad(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    const std::string tag = j.sp.str() + " " + to_string(j.order);
    try {
      const Polynomial p = realize_21_with_order(j.sp, j.order);
      if (!j.expect_ok) bad[i] = tag + " should be infeasible";
      else if (!verify_realization(p, {j.sp, {2, 1}}).verified || modulus_signature(p) != order21_signature(j.order))
        bad[i] = tag + " unverified";
    } catch (const OrderInfeasible&) {
      if (j.expect_ok) bad[i] = tag + " reported infeasible";
    } catch (const std::exception& e) {
      bad[i] = tag + " " + e.what();
    }
  });
  int failures = 0;
  for (const auto& b : bad)
    if (!b.empty()) {
      ++failures;
      out.fail(b);
    }
  out.detail << jobs.size() << " requests over 3x20 patterns, " << failures << " failures";
}

// --- 7
struct Printed {
  std::string name;
  std::string b, c;
  int b_digits, c_digits;
};

void d5_geometry(Outcome& out) {
  const auto pts = named_intersections();
  auto exact_at = [&](const std::string& name, const Rational& b, const Rational& c) {
    for (const auto& p : pts)
      if (p.name == name && p.exact && p.exact->B == b && p.exact->C == c) return true;
    return false;
  };
  const Rational third = Rational(1) / 3;
  const CurveValues common = curve_values({Rational(4) / 3, Rational(1)});
  out.require(common.T0 == 0 && common.D == 0 && common.T1 == 0 && common.T3 == 0 && common.T4 == 0,
              "(4/3,1) not on every curve");
  const CurveValues a = curve_values({Rational(2) / 3, third});
  out.require(a.T3 == 0 && a.T0 == 0, "(2/3,1/3) not on E3 and L0");
  const CurveValues b = curve_values({Rational(2), Rational(3)});
  out.require(b.T3 == 0 && b.D == 0, "(2,3) not on E3 and L");
  out.require(exact_at("E3 cap L0", Rational(2) / 3, third), "E3 cap L0 missing (2/3,1/3)");
  out.require(exact_at("E3 cap L", 2, 3), "E3 cap L missing (2,3)");
  out.require(exact_at("common point of L, L0, H, E1, E3", Rational(4) / 3, 1), "common point missing");

  // leftmost point of E1: B = (8 - sqrt 70)/12, C = (10 - sqrt 70)/20
  const long double s70 = std::sqrt(70.0L);
  const long double want_b = (8.0L - s70) / 12.0L, want_c = (10.0L - s70) / 20.0L;
  bool left_found = false;
  for (const auto& p : pts) {
    if (p.name != "leftmost point of E1") continue;
    left_found = true;
    const long double gb = std::fabs(p.B.midpoint().get_d() - static_cast<double>(want_b));
    const long double gc = std::fabs(p.C.midpoint().get_d() - static_cast<double>(want_c));
    out.require(p.B.width() < Rational(Rational(1) / 1000000000000L) && gb < 1e-12L, "leftmost B off");
    out.require(p.C.width() < Rational(Rational(1) / 1000000000000L) && gc < 1e-12L, "leftmost C off");
    out.require(truncated_decimal(p.B, 3) == "-0.030" && truncated_decimal(p.C, 3) == "0.081", "leftmost digits");
  }
  out.require(left_found, "leftmost point of E1 missing");

  const std::vector<Printed> printed{{"H cap E3", "0.34", "2.42", 2, 2},
                                     {"E1 cap E3", "0.14", "0.41", 2, 2},
                                     {"P cap L0", "0.36", "0.03", 2, 2},
                                     {"P cap L0", "3.63", "3.29", 2, 2},
                                     {"P cap E1", "0.47", "0.22", 2, 2}};
  for (const auto& w : printed) {
    std::string got = "none";
    bool hit = false;
    for (const auto& p : pts) {
      if (p.name != w.name || p.exact) continue;
      const std::string gb = truncated_decimal(p.B, w.b_digits);
      if (gb != w.b) continue;
      got = gb + "," + truncated_decimal(p.C, w.c_digits);
      hit = truncated_decimal(p.C, w.c_digits) == w.c;
    }
    out.require(hit, w.name + " printed (" + w.b + "," + w.c + ") computed (" + got + ")");
  }
  out.require(exact_at("P cap E1", 0, 0), "P cap E1 missing (0,0)");

  const RegionGrid g = RegionGrid::build(2000);
  const CaseIReport ci = case_i_empty(g);
  out.require(ci.empty, "case (i) region not empty: " + ci.diagnostic);
  const ConnectivityReport cc = case_ii_connected(2000);
  out.require(cc.connected, "case (ii) region not connected at 2000: " + std::to_string(cc.components) + " components");
  out.detail << "case_ii cells " << g.count(CellClass::case_ii) << ", components " << cc.components;
}

// --- 8
void involution_laws(Outcome& out) {
  Rng rng(8);
  for (int k = 0; k < 1000; ++k) {
    std::vector<Rational> roots;
    Polynomial p = Polynomial::constant(1);
    const int n = static_cast<int>(rng.range(1, 8));
    std::set<Rational> used;
    for (int i = 0; i < n; ++i) {
      Rational r = rng.ratio(30, 7);
      if (rng.coin()) r = -r;
      if (!used.insert(r).second) continue;
      roots.push_back(r);
      p = p * Polynomial{Rational(-r), Rational(1)};
    }
    if (rng.coin()) p = p * Polynomial{rng.ratio(20, 3), rng.coin() ? Rational(1, 3) : Rational(-1, 3), Rational(1)};
    const Polynomial f = reflect(p), r = reverse(p);
    out.require(reflect(f) == p, "reflect not an involution on " + p.str());
    out.require(reverse(r) == p, "reverse not an involution on " + p.str());
    out.require(reverse(f) == reflect(r), "no commutation on " + p.str());
    out.require(f.is_monic() && r.is_monic(), "monic lost on " + p.str());
    for (const auto& x : roots) {
      out.require(f(Rational(-x)) == 0, "reflect root map on " + p.str());
      out.require(r(Rational(1 / x)) == 0, "reverse root map on " + p.str());
    }
    const RootProfile a = root_profile(p), b = root_profile(f), c = root_profile(r);
    out.require(a.pos == b.neg && a.neg == b.pos && a.pos == c.pos && a.neg == c.neg &&
                    a.complex_pairs == b.complex_pairs && a.complex_pairs == c.complex_pairs,
                "root counts on " + p.str());
    bool nonzero = true;
    for (const auto& co : p.coeffs()) nonzero = nonzero && co != 0;
    if (nonzero) {
      const SignPattern sp = sign_pattern_of(p);
      out.require(sign_pattern_of(f) == reflect_pattern(sp), "pattern reflect on " + p.str());
      out.require(sign_pattern_of(r) == reverse_pattern(sp), "pattern reverse on " + p.str());
    }
  }
  out.detail << "1000 polynomials";
}

// --- 9
void survey_degree_four(Outcome& out) {
  SurveyOptions plain;
  plain.budget = 100000;
  plain.use_pair_theorem = false;
  const auto entries = survey(4, plain);
  std::set<Couple> unresolved, realized;
  for (const auto& e : entries) {
    switch (e.status) {
      case SurveyStatus::realized_constructive:
      case SurveyStatus::realized_search:
        out.require(e.witness && verify_realization(*e.witness, e.couple).verified, "unverified " + e.couple.str());
        realized.insert(e.couple);
        break;
      case SurveyStatus::unresolved:
        unresolved.insert(e.couple);
        break;
      case SurveyStatus::impossible_certified:
        out.fail("certified without the pair theorem: " + e.couple.str());
        break;
    }
  }
  out.require(!unresolved.empty(), "no unresolved couple");
  for (const auto& c : unresolved)
    for (const auto& o : z2z2_orbit(c)) out.require(unresolved.count(o) == 1, "orbit not closed at " + c.str());
  SurveyOptions certified = plain;
  certified.use_pair_theorem = true;
  int impossible = 0;
  for (const auto& e : survey(4, certified)) {
    if (e.status != SurveyStatus::impossible_certified) continue;
    ++impossible;
    out.require(realized.count(e.couple) == 0, "both realized and impossible: " + e.couple.str());
  }
  out.detail << entries.size() << " couples, " << realized.size() << " realized, " << unresolved.size()
             << " unresolved:";
  for (const auto& c : unresolved) out.detail << " (" << c.str() << ")";
  out.detail << "; " << impossible << " certified by the pair theorem";
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "Descartes soundness", 60, descartes_soundness);
  failed += run(2, "component count formula", 1, component_count);
  failed += run(3, "sigma_bullet disconnection", 120, disconnection);
  failed += run(4, "three positive roots coverage", 600, three_positive_roots);
  failed += run(5, "D pattern certificates", 300, d_pattern_certificates);
  failed += run(6, "two-positive one-negative orders", 300, order_suite);
  failed += run(7, "degree five geometry", 180, d5_geometry);
  failed += run(8, "involution laws", 600, involution_laws);
  failed += run(9, "degree four survey", 600, survey_degree_four);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
