#include <vector>

#include "descartes/error.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

namespace {

std::vector<Rational> roots_for_ratio(const ModulusOrder& order, const Rational& rho) {
  std::vector<Rational> roots;
  Rational modulus = 1;
  for (char t : order.tokens()) {
    modulus *= rho;
    roots.push_back(t == 'P' ? modulus : Rational(-modulus));
  }
  return roots;
}

bool pattern_matches(const Polynomial& p, const SignPattern& sp) {
  try {
    return sign_pattern_of(p) == sp;
  } catch (const ZeroCoefficient&) {
    return false;
  }
}

}  // namespace

std::vector<Rational> hyperbolic_canonical_roots(const SignPattern& sp) {
  const ModulusOrder order = canonical_order(sp);
  Rational rho = 2;
  // rho runs through 2, 4, 16, 256, 65536, ...
  for (int step = 0; step < 8; ++step) {
    auto roots = roots_for_ratio(order, rho);
    if (pattern_matches(Polynomial::from_roots(roots), sp)) return roots;
    rho = step == 0 ? Rational(4) : Rational(rho * rho);
  }
  throw SearchExhausted("no separation ratio realizes " + sp.str());
}

Polynomial realize_hyperbolic_canonical(const SignPattern& sp) {
  auto roots = hyperbolic_canonical_roots(sp);
  Polynomial p = Polynomial::from_roots(roots);
  if (modulus_signature(p) != canonical_order(sp).tokens())
    throw SearchExhausted("hyperbolic witness has the wrong modulus order for " + sp.str());
  return p;
}

}  // namespace descartes
