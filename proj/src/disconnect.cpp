#include <algorithm>
#include <random>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

namespace {

int positive_roots(const Polynomial& p) { return sturm_count(p, Region::positive()); }

// Records probes of the homotopy and checks that the positive-root count never
// increases with t.
class ProbeLog {
 public:
  void record(const Rational& t, int count) {
    auto it = std::lower_bound(probes_.begin(), probes_.end(), t,
                               [](const auto& e, const Rational& v) { return e.first < v; });
    if (it != probes_.begin() && std::prev(it)->second < count)
      throw Error("positive-root count increased along the homotopy");
    if (it != probes_.end() && it->second > count)
      throw Error("positive-root count increased along the homotopy");
    probes_.insert(it, {t, count});
  }

 private:
  std::vector<std::pair<Rational, int>> probes_;
};

bool realizes_with_signature(const Polynomial& p, const Couple& c, const std::string& sig) {
  return realizes(p, c) && modulus_signature(p) == sig;
}

}  // namespace

std::string to_string(CollisionBranch b) {
  switch (b) {
    case CollisionBranch::upper_pair_collides: return "upper_pair_collides";
    case CollisionBranch::lower_pair_collides: return "lower_pair_collides";
    case CollisionBranch::both_collide: return "both_collide";
  }
  return "?";
}

std::string disconnect_signature_q1(int d) { return std::string(static_cast<std::size_t>(d - 4), 'N') + "PP"; }
std::string disconnect_signature_q2(int d) { return "PP" + std::string(static_cast<std::size_t>(d - 4), 'N'); }

std::pair<Polynomial, Polynomial> split_double_collision(const Polynomial& q, const Rational& a,
                                                         const Rational& b, const BlendSchedule& schedule) {
  if (!(Rational(0) < a && a < b)) throw PreconditionViolated("need 0 < a < b");
  const Rational mid = (a + b) / 2;
  const Polynomial shift{-mid, Rational(1)};
  const Couple target{sign_pattern_of(q), {2, root_profile(q).neg}};
  Rational eps = schedule.eps_start;
  for (int k = 0; k < schedule.max_steps; ++k, eps *= schedule.shrink) {
    const Polynomial minus = (q - eps * shift).monic();
    const Polynomial plus = (q + eps * shift).monic();
    if (!realizes(minus, target) || !realizes(plus, target)) continue;
    // Q- keeps the pair near b, Q+ the pair near a
    if (sturm_count(minus, Region{mid, std::nullopt}) != 2) continue;
    if (sturm_count(plus, Region{Rational(0), mid}) != 2) continue;
    return {minus, plus};
  }
  throw SearchExhausted("no epsilon separates the double collision");
}

DisconnectWitness disconnect_pair(int d, const BlendSchedule& schedule) {
  if (d < 6) throw DegreeTooSmall("disconnect_pair needs d >= 6");
  const SignPattern sp = sigma_bullet(d);
  const Couple target{sp, {2, d - 4}};
  const auto roots = hyperbolic_canonical_roots(sp);

  Polynomial negative_factor = Polynomial::constant(1);
  for (const auto& r : roots)
    if (r < 0) negative_factor = negative_factor * Polynomial{-r, Rational(1)};
  const Polynomial start = Polynomial::from_roots(roots);
  const Polynomial bump = Polynomial::monomial(1, 2) * negative_factor;
  auto family = [&](const Rational& t) { return start + t * bump; };

  ProbeLog log;
  auto count_at = [&](const Rational& t) {
    const int n = positive_roots(family(t));
    log.record(t, n);
    return n;
  };
  if (count_at(0) != 4) throw Error("starting polynomial lacks four positive roots");

  Rational hi = 1;
  int doublings = 0;
  while (count_at(hi) == 4) {
    if (++doublings > 512) throw SearchExhausted("positive roots never collide along the homotopy");
    hi *= 2;
  }
  Rational lo = 0;
  const Rational width = Rational(1) / (Integer(1) << 40);
  while (hi - lo >= width) {
    const Rational mid = (lo + hi) / 2;
    (count_at(mid) == 4 ? lo : hi) = mid;
  }

  DisconnectWitness w;
  w.d = d;
  w.start = start;
  // step past the collision until the surviving roots are simple
  Rational t1 = hi;
  for (int k = 0; k < 64; ++k, t1 += width) {
    const Polynomial q = family(t1);
    const RootProfile prof = root_profile(q);
    log.record(t1, prof.pos);
    if (!prof.all_simple && prof.pos == 2 && prof.pos_mult == 4) {
      // both pairs are exact double roots at this parameter
      std::vector<Rational> pos;
      for (const auto& r : isolate_real_roots(q, Rational(1)))
        if (r.lo >= 0) pos.push_back(r.midpoint());
      if (pos.size() != 2) throw Error("expected two positive double roots");
      w.branch = CollisionBranch::both_collide;
      auto [minus, plus] = split_double_collision(q, pos[0], pos[1], schedule);
      w.q1 = minus;
      w.q2 = plus;
    } else if (!prof.all_simple) {
      continue;
    } else if (prof.pos == 2) {
      const std::string sig = modulus_signature(q);
      if (sig == disconnect_signature_q1(d)) {
        w.branch = CollisionBranch::lower_pair_collides;
        w.q1 = q.monic();
        w.q2 = reverse(w.q1);
      } else if (sig == disconnect_signature_q2(d)) {
        w.branch = CollisionBranch::upper_pair_collides;
        w.q2 = q.monic();
        w.q1 = reverse(w.q2);
      } else {
        throw Error("unexpected modulus order after the collision: " + sig);
      }
    } else if (prof.pos == 0) {
      // both pairs vanished inside the final bracket
      const auto iv = isolate_real_roots(family(lo), Rational(width));
      std::vector<Rational> pos;
      for (const auto& r : iv)
        if (r.lo > 0) pos.push_back(r.midpoint());
      if (pos.size() != 4) throw Error("expected four positive roots before the collision");
      w.branch = CollisionBranch::both_collide;
      auto [minus, plus] = split_double_collision(q, (pos[0] + pos[1]) / 2, (pos[2] + pos[3]) / 2, schedule);
      w.q1 = minus;
      w.q2 = plus;
    } else {
      continue;
    }
    w.t0_bracket = Interval{lo, t1};
    if (!realizes_with_signature(w.q1, target, disconnect_signature_q1(d)) ||
        !realizes_with_signature(w.q2, target, disconnect_signature_q2(d)))
      throw Error("disconnect witnesses failed verification");
    return w;
  }
  throw SearchExhausted("could not step past the collision");
}

ObstructionReport obstruction_check(int d) {
  if (d % 2 != 0) throw PreconditionViolated("obstruction_check needs even d");
  const SignPattern sp = sigma_bullet(d);
  ObstructionReport r;
  r.d = d;
  r.holds = true;
  for (int j = d; j >= 0; j -= 2) {
    r.even_degrees.push_back(j);
    r.signs.push_back(sp.sign_of_degree(j));
    if (sp.sign_of_degree(j) < 0) r.holds = false;
  }
  return r;
}

SignDeductionReport odd_obstruction_step(const Polynomial& p, const Rational& delta) {
  const int d = p.degree();
  if (d < 7 || d % 2 == 0) throw PreconditionViolated("odd_obstruction_step needs odd d >= 7");
  if (delta <= 0) throw PreconditionViolated("delta must be positive");
  SignPattern sp;
  try {
    sp = sign_pattern_of(p);
  } catch (const ZeroCoefficient&) {
    throw WrongPattern("polynomial has a zero coefficient");
  }
  if (sp != sigma_bullet(d)) throw WrongPattern("pattern " + sp.str() + " is not " + sigma_bullet(d).str());

  SignDeductionReport r;
  r.quotient = factor_out_root(p.monic(), -delta);
  const Polynomial& u = r.quotient;
  auto add = [&](std::string name, bool holds) { r.deductions.push_back({std::move(name), holds}); };
  add("u_0 > 0", u.coeff(0) > 0);
  add("u_" + std::to_string(d - 2) + " < 0", u.coeff(d - 2) < 0);
  add("u_" + std::to_string(d - 3) + " > 0", u.coeff(d - 3) > 0);
  add("u_1 < 0", u.coeff(1) < 0);
  add("u_2 > 0", u.coeff(2) > 0);
  r.quotient_negative_roots = sturm_count(u, Region::negative());
  if (r.quotient_negative_roots == d - 5) {
    r.full_pattern_checked = true;
    bool middle = true;
    for (int k = 2; k <= d - 3; ++k) middle = middle && u.coeff(k) > 0;
    add("u_k > 0 for 2 <= k <= " + std::to_string(d - 3), middle);
  }
  r.all_hold = std::all_of(r.deductions.begin(), r.deductions.end(), [](const auto& x) { return x.holds; });
  return r;
}

OddObstructionCase odd_obstruction_sample(int d, std::uint64_t seed) {
  if (d < 7 || d % 2 == 0) throw PreconditionViolated("odd_obstruction_sample needs odd d >= 7");
  std::mt19937_64 rng(seed);
  auto frac = [&](int bits) {
    Rational r(Integer(static_cast<unsigned long>(rng() >> (64 - bits))), Integer(1) << bits);
    r.canonicalize();
    return r;
  };
  const SignPattern want_u = sigma_bullet(d - 1);
  const SignPattern want_p = sigma_bullet(d);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // two small positive roots, negative roots in between, a large complex pair near the positive axis
    std::vector<Rational> roots;
    roots.push_back(Rational(1, 2) + frac(8) / 2);
    roots.push_back(Rational(3, 2) + frac(8) / 2);
    Rational scale = 4;
    for (int i = 0; i < d - 5; ++i) {
      scale *= 4;
      roots.push_back(-(scale * (1 + frac(8))));
    }
    const Rational big = scale * 64 * (1 + frac(4));
    const Rational c = Rational(15, 16) + frac(4) / 16;  // cosine of the pair's argument
    const Polynomial pair{big * big, -2 * big * c, Rational(1)};
    const Polynomial u = Polynomial::from_roots(roots) * pair;
    try {
      if (sign_pattern_of(u) != want_u) continue;
    } catch (const ZeroCoefficient&) {
      continue;
    }
    // admissible delta: the pattern of (x + delta) U forces these bounds
    const Rational lo = std::max(Rational(u.coeff(0) / -u.coeff(1)), Rational(-u.coeff(1) / u.coeff(2)));
    const Rational hi = std::min(Rational(-u.coeff(d - 2)), Rational(u.coeff(d - 3) / -u.coeff(d - 2)));
    if (!(lo < hi)) continue;
    Rational delta = 1;
    while (delta <= lo) delta *= 2;
    if (!(delta < hi)) delta = (lo + hi) / 2;
    const Polynomial p = Polynomial{delta, Rational(1)} * u;
    try {
      if (sign_pattern_of(p) != want_p) continue;
    } catch (const ZeroCoefficient&) {
      continue;
    }
    return {p, delta};
  }
  throw SearchExhausted("no synthetic odd-degree sample found");
}

}  // namespace descartes
