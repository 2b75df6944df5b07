#include "descartes/lowdeg.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "descartes/error.hpp"

namespace descartes {

namespace {

// a B^2 + b BC + c C^2 + d B + e C + f
struct QuadForm {
  long a, b, c, d, e, f;
  Rational eval(const Rational& B, const Rational& C) const {
    return a * B * B + b * B * C + c * C * C + d * B + e * C + f;
  }
};

constexpr QuadForm kT0{0, 0, 0, 3, -3, -1};
constexpr QuadForm kD{0, 0, 0, 3, -1, -3};
constexpr QuadForm kT1{3, -6, 5, -1, -1, 0};
constexpr QuadForm kT3{-3, 2, -1, 2, 2, -1};
constexpr QuadForm kT4{3, -1, 0, -6, -1, 5};
constexpr QuadForm kC{0, 0, 0, 0, 1, 0};
constexpr QuadForm kM{1, 0, 0, 0, -4, 0};  // B^2 - 4C

// forms in the order T0, D, T1, T3, T4, C, M with the signs each case requires
constexpr std::array<QuadForm, 7> kForms{kT0, kD, kT1, kT3, kT4, kC, kM};
constexpr std::array<int, 7> kCaseII{-1, -1, 1, -1, 1, 1, -1};
constexpr std::array<int, 7> kCaseI{1, 1, -1, 1, -1, 1, -1};

int worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("REALIZER_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

// Lattice B = X/S, C = Y/S with S = 2R; cell (i, j) has an integer center and
// half-widths (b_hi - b_lo) and (c_hi - c_lo) in lattice units.
struct Lattice {
  std::int64_t S, x0, y0, hu, hv;
  explicit Lattice(const RegionGrid& g) : Lattice(g.resolution(), g.bounds()) {}
  Lattice(int resolution, const GridBounds& b) {
    auto whole = [](const Rational& q) {
      if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw PreconditionViolated("grid bounds must be integers");
      return static_cast<std::int64_t>(q.get_num().get_si());
    };
    S = 2 * static_cast<std::int64_t>(resolution);
    x0 = S * whole(b.b_lo);
    y0 = S * whole(b.c_lo);
    hu = whole(b.b_hi) - whole(b.b_lo);
    hv = whole(b.c_hi) - whole(b.c_lo);
    if (hu <= 0 || hv <= 0) throw PreconditionViolated("grid bounds are empty");
  }
  std::int64_t xc(int i) const { return x0 + (2 * i + 1) * hu; }
  std::int64_t yc(int j) const { return y0 + (2 * j + 1) * hv; }
};

// Sign of the form on the closed cell, or 0 when the enclosure reaches zero.
int cell_sign(const QuadForm& q, std::int64_t X, std::int64_t Y, const Lattice& L) {
  const std::int64_t S = L.S;
  const std::int64_t center =
      q.a * X * X + q.b * X * Y + q.c * Y * Y + q.d * S * X + q.e * S * Y + q.f * S * S;
  const std::int64_t gx = 2 * q.a * X + q.b * Y + q.d * S;
  const std::int64_t gy = q.b * X + 2 * q.c * Y + q.e * S;
  const std::int64_t radius = std::llabs(gx) * L.hu + std::llabs(gy) * L.hv + std::labs(q.a) * L.hu * L.hu +
                              std::labs(q.b) * L.hu * L.hv + std::labs(q.c) * L.hv * L.hv;
  if (center > radius) return 1;
  if (center < -radius) return -1;
  return 0;
}

std::array<int, 7> cell_signs(int i, int j, const Lattice& L) {
  std::array<int, 7> s{};
  for (std::size_t k = 0; k < kForms.size(); ++k) s[k] = cell_sign(kForms[k], L.xc(i), L.yc(j), L);
  return s;
}

CellClass classify_cell(const std::array<int, 7>& s) {
  bool certain = true, violates_ii = false, violates_i = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 0) {
      certain = false;
      continue;
    }
    violates_ii = violates_ii || s[k] != kCaseII[k];
    violates_i = violates_i || s[k] != kCaseI[k];
  }
  if (violates_ii && violates_i) return CellClass::neither;
  if (!certain) return CellClass::boundary;
  return violates_ii ? CellClass::case_i : CellClass::case_ii;
}

// Interval enclosure of a polynomial over [lo, hi].
Interval enclose(const Polynomial& p, const Interval& x) {
  Rational lo = 0, hi = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const std::array<Rational, 4> prods{lo * x.lo, lo * x.hi, hi * x.lo, hi * x.hi};
    lo = *std::min_element(prods.begin(), prods.end()) + p.coeff(k);
    hi = *std::max_element(prods.begin(), prods.end()) + p.coeff(k);
  }
  return {lo, hi};
}

Interval divide(const Interval& n, const Interval& d) {
  if (d.lo <= 0 && d.hi >= 0) throw Error("denominator enclosure contains zero");
  const std::array<Rational, 4> q{n.lo / d.lo, n.lo / d.hi, n.hi / d.lo, n.hi / d.hi};
  return {*std::min_element(q.begin(), q.end()), *std::max_element(q.begin(), q.end())};
}

std::string decimals_of(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? std::string() : printed.substr(dot + 1);
}

bool printed_matches(const std::string& printed, const Interval& iv, const std::optional<Rational>& exact) {
  if (printed.find('.') == std::string::npos) {
    Rational want(printed);
    want.canonicalize();
    return exact && *exact == want;
  }
  return truncated_decimal(iv, static_cast<int>(decimals_of(printed).size())) == printed;
}

NamedPoint exact_point(std::string name, const Rational& B, const Rational& C, const std::string& pb,
                       const std::string& pc, std::vector<QuadForm> on, std::string method) {
  NamedPoint p;
  p.name = std::move(name);
  p.printed_B = pb;
  p.printed_C = pc;
  p.exact = CurvePoint{B, C};
  p.B = {B, B};
  p.C = {C, C};
  p.method = std::move(method);
  bool ok = printed_matches(pb, p.B, B) && printed_matches(pc, p.C, C);
  for (const auto& q : on) ok = ok && q.eval(B, C) == 0;
  p.matches = ok;
  return p;
}

const Rational kWidth = Rational(1) / (Integer(1) << 60);

// Real root of `pb` with index `which` (ascending), C = num(B)/den(B).
NamedPoint numeric_point(std::string name, const Polynomial& pb, std::size_t which, const Polynomial& num,
                         const Polynomial& den, const std::string& printed_b, const std::string& printed_c,
                         std::string method) {
  const auto roots = isolate_real_roots(pb, kWidth);
  if (which >= roots.size()) throw Error("missing root for " + name);
  NamedPoint p;
  p.name = std::move(name);
  p.printed_B = printed_b;
  p.printed_C = printed_c;
  p.B = roots[which];
  p.C = divide(enclose(num, p.B), enclose(den, p.B));
  p.method = std::move(method);
  p.matches = printed_matches(printed_b, p.B, std::nullopt) && printed_matches(printed_c, p.C, std::nullopt);
  return p;
}

Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(ascending); }

}  // namespace

CurveValues curve_values(const CurvePoint& pt) {
  return {kT0.eval(pt.B, pt.C), kD.eval(pt.B, pt.C), kT1.eval(pt.B, pt.C), kT3.eval(pt.B, pt.C),
          kT4.eval(pt.B, pt.C)};
}

Polynomial expand_d5(const Rational& A, const Rational& B, const Rational& C) {
  return poly({1, -2, 1}) * poly({A, 1}) * poly({C, B, 1});
}

std::vector<Rational> d5_coefficients(const Rational& A, const Rational& B, const Rational& C) {
  return {A * C, A * B - 2 * A * C + C, -2 * A * B + A * C + A + B - 2 * C, A * B - 2 * A - 2 * B + C + 1,
          A + B - 2};
}

std::string to_string(CaseClass c) {
  switch (c) {
    case CaseClass::case_i: return "case_i";
    case CaseClass::case_ii: return "case_ii";
    case CaseClass::neither: return "neither";
  }
  return "?";
}

Classification classify_case(const CurvePoint& pt) {
  const CurveValues v = curve_values(pt);
  Classification r;
  if (v.T0 > 0 && v.D > 0 && v.T1 < 0 && v.T3 > 0 && v.T4 < 0)
    r.cls = CaseClass::case_i;
  else if (v.T0 < 0 && v.D < 0 && v.T1 > 0 && v.T3 < 0 && v.T4 > 0)
    r.cls = CaseClass::case_ii;
  r.member = pt.C > 0 && pt.B * pt.B - 4 * pt.C < 0;
  return r;
}

Polynomial expand_d4(const Rational& A, const Rational& B) { return poly({1, -2, 1}) * poly({B, A, 1}); }

bool d4_membership(const Rational& A, const Rational& B) {
  return A < 2 && B - 2 * A + 1 > 0 && A - 2 * B < 0 && B >= A * A / 4;
}

std::string truncated_decimal(const Interval& iv, int digits) {
  if (digits < 0) throw PreconditionViolated("digits must be >= 0");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  auto render = [&](const Rational& x) {
    Integer t;
    const Integer n = abs(x.get_num()) * scale;
    mpz_tdiv_q(t.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    std::string s = t.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (x < 0 ? "-" : "") + s;
  };
  const std::string lo = render(iv.lo), hi = render(iv.hi);
  return lo == hi ? lo : std::string();
}

std::vector<NamedPoint> named_intersections() {
  const Rational third = Rational(1) / 3;
  std::vector<NamedPoint> out;
  out.push_back(exact_point("common point of L, L0, H, E1, E3", Rational(4) / 3, 1, "4/3", "1",
                            {kT0, kD, kT1, kT3, kT4}, "exact substitution"));
  out.push_back(exact_point("E3 tangent to the C-axis", 0, 1, "0", "1", {kT3}, "T3(0,C) = -(C-1)^2"));
  out.push_back(exact_point("E1 meets the C-axis", 0, 0, "0", "0", {kT1}, "T1(0,C) = C(5C-1)"));
  out.push_back(exact_point("E1 meets the C-axis", 0, Rational(1) / 5, "0", "1/5", {kT1}, "T1(0,C) = C(5C-1)"));
  out.push_back(exact_point("E3 cap L0", Rational(2) / 3, third, "2/3", "1/3", {kT3, kT0}, "C = B - 1/3"));
  out.push_back(exact_point("E3 cap L0", Rational(4) / 3, 1, "4/3", "1", {kT3, kT0}, "C = B - 1/3"));
  out.push_back(exact_point("E3 cap L", Rational(4) / 3, 1, "4/3", "1", {kT3, kD}, "C = 3B - 3"));
  out.push_back(exact_point("E3 cap L", 2, 3, "2", "3", {kT3, kD}, "C = 3B - 3"));
  out.push_back(numeric_point("leftmost point of E1", poly({-1, -32, 24}), 0, poly({1, 6}), poly({10}), "-0.030",
                              "0.081", "root of 24B^2-32B-1, C = (6B+1)/10"));
  out.push_back(numeric_point("H cap E3", poly({-2, 7, -4, 1}), 0, poly({5, -6, 3}), poly({1, 1}), "0.34", "2.42",
                              "root of B^3-4B^2+7B-2, C = (3B^2-6B+5)/(B+1)"));
  out.push_back(numeric_point("E1 cap E3", poly({-2, 17, -24, 16}), 0, poly({5, -9, 12}), poly({9, 4}), "0.14",
                              "0.41", "root of 16B^3-24B^2+17B-2, C = (12B^2-9B+5)/(4B+9)"));
  out.push_back(numeric_point("P cap L0", poly({4, -12, 3}), 0, poly({-third, 1}), poly({1}), "0.36", "0.03",
                              "root of 3B^2-12B+4, C = B - 1/3"));
  out.push_back(numeric_point("P cap L0", poly({4, -12, 3}), 1, poly({-third, 1}), poly({1}), "3.63", "3.29",
                              "root of 3B^2-12B+4, C = B - 1/3"));
  out.push_back(exact_point("P cap E1", 0, 0, "0", "0", {kT1, kM}, "exact substitution"));
  out.push_back(numeric_point("P cap E1", poly({-16, 44, -24, 5}), 0, poly({0, 0, Rational(1) / 4}), poly({1}),
                              "0.47", "0.22", "root of 5B^3-24B^2+44B-16, C = B^2/4"));
  return out;
}

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::case_ii: return "case_ii";
    case CellClass::case_i: return "case_i";
    case CellClass::neither: return "neither";
    case CellClass::boundary: return "boundary";
  }
  return "?";
}

RegionGrid RegionGrid::build(int resolution, const GridBounds& bounds, int threads) {
  if (resolution < 1 || resolution > 100000) throw PreconditionViolated("resolution must be in [1, 100000]");
  RegionGrid g;
  g.resolution_ = resolution;
  g.bounds_ = bounds;
  const Lattice L(resolution, bounds);
  g.cells_.assign(static_cast<std::size_t>(resolution) * resolution, CellClass::boundary);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int j; (j = next.fetch_add(1)) < resolution;)
      for (int i = 0; i < resolution; ++i)
        g.cells_[static_cast<std::size_t>(j) * resolution + i] = classify_cell(cell_signs(i, j, L));
  };
  const int n = std::min(worker_count(threads), resolution);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return g;
}

std::optional<std::pair<int, int>> RegionGrid::cell_of(const CurvePoint& pt) const {
  auto index = [&](const Rational& v, const Rational& lo, const Rational& hi) -> std::optional<int> {
    if (v < lo || v >= hi) return std::nullopt;
    const Rational t = (v - lo) * resolution_ / (hi - lo);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return static_cast<int>(q.get_si());
  };
  auto i = index(pt.B, bounds_.b_lo, bounds_.b_hi);
  auto j = index(pt.C, bounds_.c_lo, bounds_.c_hi);
  if (!i || !j) return std::nullopt;
  return std::make_pair(*i, *j);
}

CurvePoint RegionGrid::corner(int i, int j) const {
  return {bounds_.b_lo + (bounds_.b_hi - bounds_.b_lo) * i / resolution_,
          bounds_.c_lo + (bounds_.c_hi - bounds_.c_lo) * j / resolution_};
}

std::size_t RegionGrid::count(CellClass c) const { return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), c)); }

CaseIReport case_i_empty(const RegionGrid& grid) {
  const GridBounds& b = grid.bounds();
  if (b.b_lo > -2 || b.b_hi < 4 || b.c_lo > 0 || b.c_hi < 6)
    throw PreconditionViolated("grid must cover [-2,4] x (0,6]");
  CaseIReport r;
  const Lattice L(grid);
  const int n = grid.resolution();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!r.first_cell && grid.at(i, j) == CellClass::case_i) r.first_cell = std::make_pair(i, j);
      const auto s = cell_signs(i, j, L);
      if (s[3] > 0 && s[5] > 0) {  // T3 > 0, C > 0 on the whole cell
        ++r.e3_interior_cells;
        if (s[0] < 0 && s[1] < 0) ++r.e3_interior_in_upper_sector;
        if (s[0] >= 0 && s[1] >= 0) ++r.e3_interior_in_lower_sector;
      }
    }
  r.empty = !r.first_cell;
  r.diagnostic = "Int(E3) sampled on " + std::to_string(r.e3_interior_cells) + " cells: " +
                 std::to_string(r.e3_interior_in_upper_sector) + " inside S_u (T0<0, D<0), " +
                 std::to_string(r.e3_interior_in_lower_sector) + " not excluded from S_l (T0>0, D>0)";
  if (r.first_cell)
    r.diagnostic += "; case (i) cell at (" + std::to_string(r.first_cell->first) + ", " +
                    std::to_string(r.first_cell->second) + ")";
  return r;
}

ConnectivityReport case_ii_connected(const RegionGrid& grid) {
  const int n = grid.resolution();
  std::vector<int> label(static_cast<std::size_t>(n) * n, -1);
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(j) * n + i; };
  ConnectivityReport r;
  std::vector<std::pair<int, int>> stack;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (grid.at(i, j) != CellClass::case_ii || label[idx(i, j)] >= 0) continue;
      const int id = r.components++;
      label[idx(i, j)] = id;
      stack.emplace_back(i, j);
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++r.cells;
        const std::array<std::pair<int, int>, 4> nb{{{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}}};
        for (auto [u, v] : nb) {
          if (u < 0 || v < 0 || u >= n || v >= n) continue;
          if (grid.at(u, v) != CellClass::case_ii || label[idx(u, v)] >= 0) continue;
          label[idx(u, v)] = id;
          stack.emplace_back(u, v);
        }
      }
    }
  const auto upper = grid.cell_of({Rational(1) / 10, 2});
  const auto lower = grid.cell_of({Rational(1) / 20, Rational(1) / 2});
  if (upper && lower) {
    const int a = label[idx(upper->first, upper->second)];
    const int b = label[idx(lower->first, lower->second)];
    r.seeds_joined = a >= 0 && a == b;
  }
  r.connected = r.components == 1 && r.seeds_joined;
  r.insufficient_resolution = !r.connected;
  return r;
}

ConnectivityReport case_ii_connected(int resolution) {
  if (resolution < 256) throw PreconditionViolated("case_ii_connected needs resolution >= 256");
  return case_ii_connected(RegionGrid::build(resolution));
}

void write_ppm(const RegionGrid& grid, std::ostream& out) {
  const int n = grid.resolution();
  out << "P6\n" << n << ' ' << n << "\n255\n";
  for (int j = n - 1; j >= 0; --j)
    for (int i = 0; i < n; ++i) {
      static constexpr unsigned char colors[4][3] = {{40, 160, 60}, {200, 40, 40}, {255, 255, 255}, {150, 150, 150}};
      const auto* c = colors[static_cast<int>(grid.at(i, j))];
      out.write(reinterpret_cast<const char*>(c), 3);
    }
}

}  // namespace descartes
