#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

namespace {

// Nonzero real roots of a family member; a multiple root at 0 is allowed
// since the template supplies the missing low coefficients.
bool base_roots_match(const Polynomial& base, PosNegPair pair) {
  if (base.degree() < 1) return false;
  int z = 0;
  while (base.coeff(z) == 0) ++z;
  std::vector<Rational> c(base.coeffs().begin() + z, base.coeffs().end());
  const RootProfile prof = root_profile(Polynomial(std::move(c)));
  return prof.all_simple && prof.pos == pair.pos && prof.neg == pair.neg;
}

}  // namespace

Polynomial blend(const Polynomial& base, const Couple& target, const BlendSchedule& schedule,
                 const Polynomial& tmpl) {
  Rational eta = schedule.eta_start;
  for (int k = 0; k < schedule.max_steps; ++k, eta *= schedule.shrink) {
    Polynomial candidate = base + eta * tmpl;
    if (candidate.is_zero()) continue;
    candidate = candidate.monic();
    if (realizes(candidate, target)) return candidate;
  }
  throw SearchExhausted("blend ladder exhausted for " + target.str());
}

Polynomial blend_family(const std::function<Polynomial(const Rational&)>& family, const Couple& target,
                        const BlendSchedule& schedule, const Polynomial& tmpl,
                        const std::function<bool(const Polynomial&)>& accept) {
  Rational eps = schedule.eps_start;
  for (int k = 0; k < schedule.max_steps; ++k, eps *= schedule.shrink) {
    const Polynomial base = family(eps);
    if (!base_roots_match(base, target.pair)) continue;
    Rational eta = schedule.eta_start * eps;
    for (int j = 0; j < schedule.max_steps; ++j, eta *= schedule.shrink) {
      Polynomial candidate = (base + eta * tmpl).monic();
      if (!realizes(candidate, target)) continue;
      if (accept && !accept(candidate)) continue;
      return candidate;
    }
  }
  throw SearchExhausted("blend ladder exhausted for " + target.str());
}

}  // namespace descartes
