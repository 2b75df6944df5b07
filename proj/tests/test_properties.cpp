#include <gtest/gtest.h>

#include "descartes/certifier.hpp"
#include "descartes/lowdeg.hpp"
#include "descartes/realizer.hpp"
#include "support.hpp"

using namespace descartes;
using testsupport::Rng;

namespace {

SignPattern random_pattern(Rng& rng, int d) {
  std::vector<std::int8_t> v{1};
  for (int i = 0; i < d; ++i) v.push_back(rng.coin() ? 1 : -1);
  return SignPattern(v);
}

Polynomial random_monic(Rng& rng, int d, bool nonzero_constant) {
  std::vector<Rational> c;
  for (int j = 0; j < d; ++j) {
    Rational q = rng.ratio(50, 9);
    if (rng.coin()) q = -q;
    if (j > 0 && rng.range(0, 7) == 0) q = 0;
    c.push_back(q);
  }
  if (!nonzero_constant && !c.empty() && rng.range(0, 5) == 0) c[0] = 0;
  c.emplace_back(1);
  return Polynomial(c);
}

}  // namespace

TEST(Property, RootProfileMatchesConstruction) {
  Rng rng(101);
  for (int k = 0; k < 800; ++k) {
    const auto f = testsupport::random_factored(rng, 10);
    EXPECT_EQ(root_profile(f.p), f.expected) << f.p.str();
  }
}

TEST(Property, DescartesBoundsHold) {
  Rng rng(102);
  for (int k = 0; k < 800; ++k) {
    const Polynomial p = testsupport::random_factored(rng, 10).p;
    bool nonzero = true;
    for (const auto& c : p.coeffs()) nonzero = nonzero && c != 0;
    if (!nonzero) continue;
    const RootProfile prof = root_profile(p);
    const auto cp = changes_preservations(sign_pattern_of(p));
    EXPECT_LE(prof.pos_mult, cp.changes);
    EXPECT_EQ((cp.changes - prof.pos_mult) % 2, 0);
    EXPECT_LE(prof.neg_mult, cp.preservations);
    EXPECT_EQ((cp.preservations - prof.neg_mult) % 2, 0);
    EXPECT_EQ(testsupport::sign_changes(reflect(p)), cp.preservations);
  }
}

TEST(Property, InvolutionsCommuteAndMapRoots) {
  Rng rng(103);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_monic(rng, static_cast<int>(rng.range(1, 8)), true);
    EXPECT_EQ(reflect(reflect(p)), p);
    EXPECT_EQ(reverse(reverse(p)), p);
    EXPECT_EQ(reflect(reverse(p)).monic(), reverse(reflect(p)).monic());
    const RootProfile a = root_profile(p), b = root_profile(reflect(p)), c = root_profile(reverse(p));
    EXPECT_EQ(a.pos, b.neg);
    EXPECT_EQ(a.neg, b.pos);
    EXPECT_EQ(a.pos, c.pos);
    EXPECT_EQ(a.neg, c.neg);
  }
}

TEST(Property, FactorOutRootRoundTrip) {
  Rng rng(104);
  for (int k = 0; k < 300; ++k) {
    const Rational r = rng.coin() ? rng.ratio(20, 6) : Rational(-rng.ratio(20, 6));
    const Polynomial q = random_monic(rng, static_cast<int>(rng.range(0, 7)), false);
    const Polynomial p = q * Polynomial{Rational(-r), Rational(1)};
    EXPECT_EQ(factor_out_root(p, r), q);
  }
}

TEST(Property, PolynomialTextRoundTrip) {
  Rng rng(105);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_monic(rng, static_cast<int>(rng.range(0, 9)), false) * Rational(rng.ratio(7, 5));
    EXPECT_EQ(Polynomial::parse(p.str()), p);
  }
}

TEST(Property, OddEvenDecomposition) {
  Rng rng(106);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_monic(rng, static_cast<int>(rng.range(1, 9)), false);
    const Polynomial o = odd_part(p), e = even_part(p);
    EXPECT_EQ(o + e, p);
    EXPECT_EQ(rescale(o, -1), -o);
    EXPECT_EQ(rescale(e, -1), e);
  }
}

TEST(Property, CanonicalOrderCountsAgree) {
  Rng rng(107);
  for (int k = 0; k < 500; ++k) {
    const SignPattern sp = random_pattern(rng, static_cast<int>(rng.range(1, 14)));
    const auto cp = changes_preservations(sp);
    const ModulusOrder o = canonical_order(sp);
    EXPECT_EQ(o.positives(), cp.changes);
    EXPECT_EQ(o.negatives(), cp.preservations);
    EXPECT_EQ(cp.changes + cp.preservations, sp.degree());
  }
}

TEST(Property, OrbitsAreClosed) {
  Rng rng(108);
  for (int k = 0; k < 300; ++k) {
    const SignPattern sp = random_pattern(rng, static_cast<int>(rng.range(1, 10)));
    const auto pairs = compatible_pairs(sp);
    const PosNegPair pair = pairs[static_cast<std::size_t>(rng.range(0, static_cast<long>(pairs.size()) - 1))];
    const auto orbit = z2z2_orbit({sp, pair});
    EXPECT_TRUE(orbit.size() == 2 || orbit.size() == 4);
    for (const auto& c : orbit) {
      EXPECT_TRUE(compatible(c.pattern, c.pair));
      for (const auto& image : {reflect_couple(c), reverse_couple(c)})
        EXPECT_NE(std::find(orbit.begin(), orbit.end(), image), orbit.end());
    }
  }
}

TEST(Property, DPatternRecognitionInvertsConstruction) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c) EXPECT_EQ(is_D(make_D(a, b, c)), (DShape{a, b, c}));
}

TEST(Property, HyperbolicWitnessesMatchCanonicalOrder) {
  Rng rng(109);
  for (int k = 0; k < 60; ++k) {
    const SignPattern sp = random_pattern(rng, static_cast<int>(rng.range(1, 9)));
    const Polynomial p = realize_hyperbolic_canonical(sp);
    const auto cp = changes_preservations(sp);
    const Couple c{sp, {cp.changes, cp.preservations}};
    EXPECT_TRUE(realizes(p, c)) << sp.str();
    EXPECT_EQ(modulus_signature(p), canonical_order(sp).tokens());
    // orbit transfer of the witness
    for (const Polynomial& q : {reflect(p), reverse(p), reverse(reflect(p))})
      EXPECT_TRUE(realizes(q, Couple{sign_pattern_of(q), {root_profile(q).pos, root_profile(q).neg}}));
    EXPECT_TRUE(realizes(reflect(p), reflect_couple(c)));
    EXPECT_TRUE(realizes(reverse(p), reverse_couple(c)));
  }
}

TEST(Property, RandomSearchIsReproducible) {
  Rng rng(110);
  for (int k = 0; k < 20; ++k) {
    const SignPattern sp = random_pattern(rng, static_cast<int>(rng.range(2, 6)));
    const auto pairs = compatible_pairs(sp);
    const Couple c{sp, pairs.back()};
    const auto a = random_search(c, 300, static_cast<std::uint64_t>(k));
    const auto b = random_search(c, 300, static_cast<std::uint64_t>(k));
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(*a, *b);
      EXPECT_TRUE(verify_realization(*a, c).verified);
    }
  }
}

TEST(Property, DPatternPartsHaveOneSignChange) {
  Rng rng(111);
  for (int k = 0; k < 200; ++k) {
    const SignPattern sp = make_D(static_cast<int>(rng.range(1, 3)), static_cast<int>(rng.range(1, 3)),
                                  static_cast<int>(rng.range(1, 3)));
    std::vector<Rational> c(sp.size());
    for (int j = 0; j <= sp.degree(); ++j) c[static_cast<std::size_t>(j)] = rng.ratio(30, 7) * sp.sign_of_degree(j);
    c.back() = 1;
    const Polynomial p(c);
    const RootProfile e = root_profile(even_part(p));
    const RootProfile o = root_profile(odd_part(p));
    EXPECT_EQ(e.pos + e.neg, 2);
    EXPECT_EQ(e.zero_mult, 0);
    EXPECT_EQ(o.pos, 1);
    EXPECT_EQ(o.neg, 1);
    EXPECT_EQ(o.zero_mult, 1);
    EXPECT_TRUE(e.all_simple && o.all_simple);
  }
}

TEST(Property, DbisVerdictUpToFifteen) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        if (2 * a + 2 * b + 2 * c - 1 > 15) continue;
        EXPECT_TRUE(dbis_certificate(a, b, c).verdict) << a << b << c;
      }
}

TEST(Property, CaseTwoCellsHaveTheRightCoefficientSigns) {
  const RegionGrid g = RegionGrid::build(200);
  const Rational half_b = (g.bounds().b_hi - g.bounds().b_lo) / (2 * g.resolution());
  const Rational half_c = (g.bounds().c_hi - g.bounds().c_lo) / (2 * g.resolution());
  std::size_t checked = 0;
  for (int j = 0; j < g.resolution(); ++j)
    for (int i = 0; i < g.resolution(); ++i) {
      if (g.at(i, j) != CellClass::case_ii) continue;
      CurvePoint pt = g.corner(i, j);
      pt.B += half_b;
      pt.C += half_c;
      const CurveValues v = curve_values(pt);
      const Rational A = v.T0 / v.D;
      ASSERT_GT(A, 0);
      const auto f = d5_coefficients(A, pt.B, pt.C);
      EXPECT_LT(f[4], 0);
      EXPECT_GT(f[3], 0);
      EXPECT_GT(f[2], 0);
      EXPECT_LT(f[1], 0);
      EXPECT_GT(f[0], 0);
      ++checked;
    }
  EXPECT_GT(checked, 1000u);
}

TEST(Property, ExpandD5MatchesClosedForm) {
  Rng rng(112);
  for (int k = 0; k < 1000; ++k) {
    auto draw = [&] { return rng.coin() ? rng.ratio(40, 9) : Rational(-rng.ratio(40, 9)); };
    const Rational A = draw(), B = draw(), C = draw();
    const Polynomial p = expand_d5(A, B, C);
    const auto f = d5_coefficients(A, B, C);
    for (int j = 0; j < 5; ++j) ASSERT_EQ(p.coeff(j), f[static_cast<std::size_t>(j)]);
  }
}

TEST(Property, D4MembersHaveTheExpectedRoots) {
  Rng rng(113);
  int members = 0;
  for (int k = 0; k < 2000 && members < 200; ++k) {
    const Rational A = Rational(rng.range(-400, 199)) / 100;
    const Rational B = Rational(rng.range(0, 600)) / 100;
    if (!d4_membership(A, B) || !(B > A * A / 4)) continue;
    ++members;
    const Polynomial q = expand_d4(A, B);
    EXPECT_EQ(sign_pattern_of(q), sigma_bullet(4));
    const RootProfile prof = root_profile(q);
    EXPECT_EQ(prof.pos, 1);
    EXPECT_EQ(prof.pos_mult, 2);
    EXPECT_EQ(prof.complex_pairs, 1);
  }
  EXPECT_GT(members, 50);
}
