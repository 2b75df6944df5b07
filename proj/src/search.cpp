#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"

namespace descartes {

namespace {

constexpr int kAngleSteps = 64;
constexpr int kCosineBits = 16;

// Raw 64-bit draws mapped by hand so the stream is identical on every platform.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  // Dyadic 2^e (1 + f/1024), e in [-8, 7]: roughly log-uniform on [2^-8, 2^8].
  Rational modulus() {
    const int e = static_cast<int>(below(16)) - 8;
    Rational r(Integer(1024 + static_cast<long>(below(1024))), Integer(1024));
    r.canonicalize();
    if (e >= 0)
      r *= Rational(Integer(1) << e);
    else
      r /= Rational(Integer(1) << -e);
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

// cos(2 pi (k + 1/2) / 64) rounded to a multiple of 2^-16.
const std::vector<Rational>& cosine_grid() {
  static const std::vector<Rational> grid = [] {
    std::vector<Rational> g;
    for (int k = 0; k < kAngleSteps; ++k) {
      const double c = std::cos(2 * std::numbers::pi * (k + 0.5) / kAngleSteps);
      Rational q(Integer(static_cast<long>(std::lround(c * (1 << kCosineBits)))), Integer(1) << kCosineBits);
      q.canonicalize();
      g.push_back(q);
    }
    return g;
  }();
  return grid;
}

struct Factor {
  Rational c0, c1;  // linear x + c0 when quadratic is false, else x^2 + c1 x + c0
  bool quadratic = false;
};

// Multiplies out in double precision with a running magnitude bound; returns
// -1 on a certain mismatch, 1 on a certain match and 0 when undecided.
int pattern_filter(const std::vector<Factor>& factors, const SignPattern& sp) {
  const int d = sp.degree();
  std::vector<double> v{1.0}, mag{1.0};
  for (const auto& f : factors) {
    const std::size_t k = f.quadratic ? 2 : 1;
    std::vector<double> nv(v.size() + k, 0.0), nm(v.size() + k, 0.0);
    const double c0 = f.c0.get_d(), c1 = f.c1.get_d();
    for (std::size_t i = 0; i < v.size(); ++i) {
      nv[i + k] += v[i];
      nm[i + k] += mag[i];
      nv[i] += c0 * v[i];
      nm[i] += std::fabs(c0) * mag[i];
      if (f.quadratic) {
        nv[i + 1] += c1 * v[i];
        nm[i + 1] += std::fabs(c1) * mag[i];
      }
    }
    v.swap(nv);
    mag.swap(nm);
  }
  // generous bound on the accumulated rounding error relative to the magnitudes
  const double tol = 8.0 * (d + 2) * std::numeric_limits<double>::epsilon();
  int result = 1;
  for (int j = 0; j <= d; ++j) {
    const double x = v[static_cast<std::size_t>(j)];
    const double bound = tol * mag[static_cast<std::size_t>(j)];
    if (std::fabs(x) <= bound) {
      result = 0;
      continue;
    }
    if ((x > 0 ? 1 : -1) != sp.sign_of_degree(j)) return -1;
  }
  return result;
}

Polynomial expand(const std::vector<Factor>& factors) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& f : factors)
    p = p * (f.quadratic ? Polynomial{f.c0, f.c1, Rational(1)} : Polynomial{f.c0, Rational(1)});
  return p;
}

}  // namespace

std::optional<Polynomial> random_search(const Couple& couple, std::int64_t budget, std::uint64_t seed) {
  const SignPattern& sp = couple.pattern;
  if (!compatible(sp, couple.pair)) throw Incompatible("random_search needs a compatible couple");
  const int pairs = (sp.degree() - couple.pair.pos - couple.pair.neg) / 2;
  const auto& cosines = cosine_grid();
  Draws draws(seed);
  std::vector<Factor> factors;
  for (std::int64_t trial = 0; trial < budget; ++trial) {
    factors.clear();
    for (int i = 0; i < couple.pair.pos; ++i) factors.push_back({-draws.modulus(), 0, false});
    for (int i = 0; i < couple.pair.neg; ++i) factors.push_back({draws.modulus(), 0, false});
    for (int i = 0; i < pairs; ++i) {
      const Rational rho = draws.modulus();
      const Rational& c = cosines[draws.below(kAngleSteps)];
      factors.push_back({rho * rho, -2 * rho * c, true});
    }
    if (pattern_filter(factors, sp) < 0) continue;
    const Polynomial p = expand(factors);
    if (realizes(p, couple)) return p;
  }
  return std::nullopt;
}

}  // namespace descartes
