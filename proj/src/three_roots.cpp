#include <array>
#include <optional>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

namespace {

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

Polynomial mono(const Rational& c, int k) { return Polynomial::monomial(c, k); }

// Lowest m >= 1 with a negative coefficient at x^{2m}.
std::optional<int> negative_even(const SignPattern& sp) {
  for (int j = 2; j <= sp.degree(); j += 2)
    if (sp.sign_of_degree(j) < 0) return j / 2;
  return std::nullopt;
}

// Lowest n >= 1 with a negative coefficient at x^{2n-1}.
std::optional<int> negative_odd(const SignPattern& sp) {
  for (int j = 1; j <= sp.degree(); j += 2)
    if (sp.sign_of_degree(j) < 0) return (j + 1) / 2;
  return std::nullopt;
}

void require_compatible(const SignPattern& sp, PosNegPair pair) {
  if (!compatible(sp, pair))
    throw Incompatible("pair (" + std::to_string(pair.pos) + "," + std::to_string(pair.neg) +
                       ") is not compatible with " + sp.str());
}

// 3x3 solve by Cramer's rule; nullopt when singular.
std::optional<std::array<Rational, 3>> solve3(const std::array<std::array<Rational, 3>, 3>& m,
                                              const std::array<Rational, 3>& rhs) {
  auto det = [](const std::array<std::array<Rational, 3>, 3>& a) -> Rational {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const Rational d0 = det(m);
  if (d0 == 0) return std::nullopt;
  std::array<Rational, 3> out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
    out[col] = det(mc) / d0;
  }
  return out;
}

struct Condition {
  Rational point;
  bool on_derivative = false;  // F'(point) = value instead of F(point) = value
  Rational value = 0;
};

// Solves for A, B, C > 0 in F = G - A x^{2m} - B x^{2n-1} + C under three conditions.
std::optional<std::array<Rational, 3>> solve_abc(const Polynomial& g, int m, int n,
                                                 const std::array<Condition, 3>& conds) {
  const Polynomial dg = derivative(g);
  std::array<std::array<Rational, 3>, 3> mat;
  std::array<Rational, 3> rhs;
  for (int i = 0; i < 3; ++i) {
    const Rational& r = conds[i].point;
    if (!conds[i].on_derivative) {
      mat[i] = {-power(r, 2 * m), -power(r, 2 * n - 1), Rational(1)};
      rhs[i] = conds[i].value - g(r);
    } else {
      mat[i] = {Rational(-2 * m) * power(r, 2 * m - 1), Rational(-(2 * n - 1)) * power(r, 2 * n - 2),
                Rational(0)};
      rhs[i] = conds[i].value - dg(r);
    }
  }
  return solve3(mat, rhs);
}

Polynomial assemble(const Polynomial& g, int m, int n, const std::array<Rational, 3>& abc) {
  return g - mono(abc[0], 2 * m) - mono(abc[1], 2 * n - 1) + Polynomial::constant(abc[2]);
}

bool needs_shift(Order21 o) {
  return o == Order21::A1_B_A2 || o == Order21::B_A1_A2 || o == Order21::A1_A2_B;
}

bool uses_eps(Order21 o) { return o != Order21::A1_B_A2; }

std::array<Condition, 3> order_conditions(Order21 o, const Rational& eps) {
  const Condition f1{1, false, 0};
  const Condition df1{1, true, 0};
  switch (o) {
    case Order21::A1_B_A2:
      return {f1, df1, Condition{-1, false, 0}};
    case Order21::B_A1_A2:
      return {f1, df1, Condition{Rational(-1) + eps, false, 0}};
    case Order21::A1_A2_B:
      return {f1, df1, Condition{Rational(-1) - eps, false, 0}};
    case Order21::Beq_A1_A2:
      return {f1, Condition{1, true, -eps}, Condition{-1, false, 0}};
    case Order21::A1_A2eqB:
      return {f1, Condition{1, true, eps}, Condition{-1, false, 0}};
  }
  throw PreconditionViolated("unknown order");
}

// Both negative monomials exist: solve the linear system for every ladder value.
Polynomial order_from_system(const SignPattern& sp, Order21 order, int m, int n, const BlendSchedule& schedule) {
  const int d = sp.degree();
  const Couple target{sp, {2, 1}};
  const Polynomial tmpl = pattern_template(sp);
  const std::string want = order21_signature(order);
  Rational eps = schedule.eps_start;
  const int outer = uses_eps(order) ? schedule.max_steps : 1;
  for (int k = 0; k < outer; ++k, eps *= schedule.shrink) {
    const auto conds = order_conditions(order, eps);
    Rational eta = schedule.eta_start * eps;
    for (int j = 0; j < schedule.max_steps; ++j, eta *= schedule.shrink) {
      const Polynomial g = mono(1, d) + eta * tmpl;
      auto abc = solve_abc(g, m, n, conds);
      if (!abc) continue;
      if (needs_shift(order)) (*abc)[2] -= eta * eps;
      if ((*abc)[0] <= 0 || (*abc)[1] <= 0 || (*abc)[2] <= 0) continue;
      const Polynomial cand = assemble(g, m, n, *abc).monic();
      if (realizes(cand, target) && modulus_signature(cand) == want) return cand;
    }
  }
  throw SearchExhausted("no realization of " + sp.str() + " with order " + to_string(order));
}

// All odd coefficients positive: W = x^{2m-1}(x-1)(x-2) + eps, then the template.
Polynomial order_all_odd_positive(const SignPattern& sp, const BlendSchedule& schedule) {
  const int m = *negative_even(sp);
  const Polynomial w = mono(1, 2 * m + 1) - mono(3, 2 * m) + mono(2, 2 * m - 1);
  const std::string want = order21_signature(Order21::B_A1_A2);
  return blend_family([&](const Rational& eps) { return w + Polynomial::constant(eps); },
                      Couple{sp, {2, 1}}, schedule, pattern_template(sp),
                      [&](const Polynomial& p) { return modulus_signature(p) == want; });
}

bool all_odd_positive(const SignPattern& sp) { return !negative_odd(sp).has_value(); }

}  // namespace

std::string to_string(Order21 o) {
  switch (o) {
    case Order21::B_A1_A2: return "B_A1_A2";
    case Order21::Beq_A1_A2: return "Beq_A1_A2";
    case Order21::A1_B_A2: return "A1_B_A2";
    case Order21::A1_A2eqB: return "A1_A2eqB";
    case Order21::A1_A2_B: return "A1_A2_B";
  }
  return "?";
}

Order21 parse_order21(const std::string& s) {
  for (Order21 o : {Order21::B_A1_A2, Order21::Beq_A1_A2, Order21::A1_B_A2, Order21::A1_A2eqB, Order21::A1_A2_B})
    if (to_string(o) == s) return o;
  throw ParseError("unknown order '" + s + "'");
}

std::string order21_signature(Order21 o) {
  switch (o) {
    case Order21::B_A1_A2: return "NPP";
    case Order21::Beq_A1_A2: return "P=NP";
    case Order21::A1_B_A2: return "PNP";
    case Order21::A1_A2eqB: return "PP=N";
    case Order21::A1_A2_B: return "PPN";
  }
  return "";
}

Polynomial order21_base(int d, int m, int n) {
  if (d < 3 || d % 2 == 0 || m < 1 || n < 1 || 2 * m >= d || 2 * n - 1 >= d)
    throw PreconditionViolated("order21_base needs odd d and 2m, 2n-1 < d");
  auto abc = solve_abc(mono(1, d), m, n, order_conditions(Order21::A1_B_A2, 0));
  return assemble(mono(1, d), m, n, *abc);
}

Polynomial realize_21(const SignPattern& sp, const BlendSchedule& schedule) {
  require_compatible(sp, {2, 1});
  const int d = sp.degree();
  const Couple target{sp, {2, 1}};
  const Polynomial tmpl = pattern_template(sp);
  if (auto m = negative_even(sp)) {
    const Polynomial rest = Polynomial::constant(1) - mono(1, 2 * *m);
    return blend_family([&](const Rational& eps) { return mono(eps, d) + rest; }, target, schedule, tmpl);
  }
  const int n = *negative_odd(sp);  // 2n-1 < d since the leading sign is +
  const Polynomial p2 = mono(1, d) - mono(1, 2 * n - 1);
  return blend_family([&](const Rational& eps) { return p2 + Polynomial::constant(eps); }, target, schedule,
                      tmpl);
}

Polynomial realize_21_with_order(const SignPattern& sp, Order21 order, const BlendSchedule& schedule) {
  require_compatible(sp, {2, 1});
  auto m = negative_even(sp);
  auto n = negative_odd(sp);
  if (m && n) return order_from_system(sp, order, *m, *n, schedule);
  if (all_odd_positive(sp)) {
    if (order != Order21::B_A1_A2)
      throw OrderInfeasible("all odd coefficients are positive: only B_A1_A2 is possible for " + sp.str());
    return order_all_odd_positive(sp, schedule);
  }
  // all even coefficients positive: reciprocal roots turn B_A1_A2 into A1_A2_B
  if (order != Order21::A1_A2_B)
    throw OrderInfeasible("all even coefficients are positive: only A1_A2_B is possible for " + sp.str());
  const Polynomial r = reverse(order_all_odd_positive(reverse_pattern(sp), schedule));
  if (!realizes(r, Couple{sp, {2, 1}}) || modulus_signature(r) != order21_signature(order))
    throw SearchExhausted("reversed witness failed verification for " + sp.str());
  return r;
}

Polynomial realize_30(const SignPattern& sp, const BlendSchedule& schedule) {
  require_compatible(sp, {3, 0});
  if (auto shape = is_D(sp)) throw IsDPattern(shape->a, shape->b, shape->c);
  const int d = sp.degree();
  const Couple target{sp, {3, 0}};
  const Polynomial tmpl = pattern_template(sp);
  auto s = [&](int j) { return sp.sign_of_degree(j); };

  // negative x^{2m} above positive x^{2p}
  for (int m = (d - 1) / 2; m >= 2; --m) {
    if (s(2 * m) > 0) continue;
    for (int p = 1; p < m; ++p) {
      if (s(2 * p) < 0) continue;
      const Polynomial p3 = mono(-1, 2 * m) + mono(Rational(Rational(m) / p), 2 * p) - Polynomial::constant(Rational(Rational(m - p) / p));
      return blend_family([&](const Rational& eps) { return p3 + mono(eps, d); }, target, schedule, tmpl);
    }
  }
  // negative x^{2nu}, positive x^{2mu-1}, negative x^{2theta}, degrees decreasing
  for (int nu = (d - 1) / 2; nu >= 1; --nu) {
    if (s(2 * nu) > 0) continue;
    for (int mu = nu; mu >= 1; --mu) {
      if (s(2 * mu - 1) < 0) continue;
      for (int theta = mu - 1; theta >= 0; --theta) {
        if (s(2 * theta) > 0) continue;
        const Rational two_nu = power(2, 2 * nu), two_mu = power(2, 2 * mu - 1), two_theta = power(2, 2 * theta);
        const Rational dd = (two_nu - two_mu) / (two_mu - two_theta);
        const Rational cc = dd + 1;
        const Polynomial p5 = mono(-1, 2 * nu) + mono(cc, 2 * mu - 1) - mono(dd, 2 * theta);
        return blend_family([&](const Rational& eps) { return p5 + mono(eps, d); }, target, schedule, tmpl);
      }
    }
  }
  // negative x^{2u-1} above positive x^{2v-1}
  for (int u = (d - 1) / 2; u >= 2; --u) {
    if (s(2 * u - 1) > 0) continue;
    for (int v = 1; v < u; ++v) {
      if (s(2 * v - 1) < 0) continue;
      const Rational f = Rational(d - 2 * u + 1) / (2 * (u - v));
      const Rational e = f + 1;
      const Polynomial p7 = mono(1, d) - mono(e, 2 * u - 1) + mono(f, 2 * v - 1);
      return blend_family([&](const Rational& eps) { return p7 - Polynomial::constant(eps); }, target, schedule,
                          tmpl);
    }
  }
  throw Error("no construction applies to " + sp.str());
}

}  // namespace descartes
