#include "descartes/roots.hpp"

#include <algorithm>

#include "descartes/error.hpp"
#include "detail/integer_poly.hpp"

namespace descartes {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Polynomial strip_zero_roots(const Polynomial& p, int& zero_mult) {
  zero_mult = 0;
  while (zero_mult <= p.degree() && p.coeffs()[static_cast<std::size_t>(zero_mult)] == 0) ++zero_mult;
  std::vector<Rational> c(p.coeffs().begin() + zero_mult, p.coeffs().end());
  return Polynomial(std::move(c));
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionViolated("Sturm sequence of the zero polynomial");
  squarefree_ = squarefree_part(p);
  chain_.push_back(primitive_integer(squarefree_));
  if (squarefree_.degree() < 1) return;
  auto d = primitive_integer(derivative(squarefree_));
  chain_.push_back(std::move(d));
  while (true) {
    auto r = detail::positive_prem(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    detail::remove_content(r);
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(detail::sign_at(q, x.get_num(), x.get_den()));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.back()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    const int s = sgn(q.back());
    signs.push_back((q.size() - 1) % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

int SturmSequence::count(const Region& region) const {
  const int vlo = region.lo ? variations(*region.lo) : variations_at_neg_infinity();
  const int vhi = region.hi ? variations(*region.hi) : variations_at_pos_infinity();
  int n = vlo - vhi;
  if (region.hi && sign_at(*region.hi) == 0) --n;
  return n;
}

int SturmSequence::sign_at(const Rational& x) const {
  return detail::sign_at(chain_.front(), x.get_num(), x.get_den());
}

int sturm_count(const Polynomial& p, const Region& region) { return SturmSequence(p).count(region); }

RootProfile root_profile(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionViolated("root profile of the zero polynomial");
  RootProfile prof;
  Polynomial q = strip_zero_roots(p, prof.zero_mult);
  const int deg = q.degree();
  Polynomial g = q;
  for (int level = 0; g.degree() >= 1; ++level) {
    SturmSequence seq(g);
    const int pos = seq.count(Region::positive());
    const int neg = seq.count(Region::negative());
    if (level == 0) {
      prof.pos = pos;
      prof.neg = neg;
    } else if (pos + neg > 0) {
      prof.all_simple = false;
    }
    prof.pos_mult += pos;
    prof.neg_mult += neg;
    g = gcd(g, derivative(g));
  }
  if (prof.zero_mult > 1) prof.all_simple = false;
  prof.complex_pairs = (deg - prof.pos_mult - prof.neg_mult) / 2;
  return prof;
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  const Rational& lc = p.leading();
  for (int j = 0; j < p.degree(); ++j) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(j)] / lc);
    if (r > m) m = r;
  }
  Rational bound = m + 1;
  Rational b = 1;
  while (b < bound) b *= 2;
  return b;
}

Interval refine(const SturmSequence& seq, Interval iv, const Rational& max_width) {
  int slo = seq.sign_at(iv.lo);
  while (iv.width() >= max_width) {
    Rational mid = iv.midpoint();
    const int sm = seq.sign_at(mid);
    if (sm == 0) {
      Rational half = std::min(Rational(max_width / 4), Rational((mid - iv.lo) / 2));
      return Interval{mid - half, mid + half};
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<Interval> isolate_real_roots(const Polynomial& p, const std::optional<Rational>& max_width) {
  SturmSequence seq(p);
  const Polynomial& s = seq.squarefree();
  std::vector<Interval> out;
  if (s.degree() < 1) return out;
  const Rational bound = root_bound(s);
  std::vector<std::pair<Interval, int>> stack;
  Interval start{-bound, bound};
  stack.emplace_back(start, seq.count(Region::open(start)));
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    // split at a point that is not a root
    Rational split = iv.midpoint();
    for (int k = 3; seq.sign_at(split) == 0; ++k) split = iv.lo + iv.width() / k;
    Interval left{iv.lo, split}, right{split, iv.hi};
    const int nl = seq.count(Region::open(left));
    stack.emplace_back(right, n - nl);
    stack.emplace_back(left, nl);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  if (max_width)
    for (auto& iv : out) iv = refine(seq, iv, *max_width);
  return out;
}

namespace {

struct ModulusWork {
  std::vector<std::pair<Interval, int>> members;  // root interval, sign of root
  ModulusClass cls;

  void update() {
    bool first = true;
    for (const auto& [iv, sign] : members) {
      Interval m = sign > 0 ? iv : Interval{-iv.hi, -iv.lo};
      if (first) {
        cls.modulus = m;
        first = false;
      } else {
        cls.modulus.lo = std::max(cls.modulus.lo, m.lo);
        cls.modulus.hi = std::min(cls.modulus.hi, m.hi);
      }
    }
  }
};

bool overlaps(const Interval& a, const Interval& b) { return a.lo < b.hi && b.lo < a.hi; }

}  // namespace

std::vector<ModulusClass> modulus_classes(const Polynomial& p) {
  SturmSequence seq(p);
  const Polynomial& s = seq.squarefree();
  auto roots = isolate_real_roots(s);
  const bool zero_root = s.degree() >= 1 && s.coeff(0) == 0;

  std::vector<ModulusClass> out;
  std::vector<std::pair<Interval, int>> positives, negatives;
  for (auto iv : roots) {
    if (iv.contains(Rational(0))) {
      if (zero_root) {
        ModulusClass z;
        z.is_zero = true;
        z.modulus = Interval{Rational(0), Rational(0)};
        out.push_back(z);
        continue;
      }
      // keep the half that still brackets the root
      if (seq.sign_at(iv.lo) != seq.sign_at(Rational(0)))
        iv.hi = 0;
      else
        iv.lo = 0;
    }
    if (iv.lo >= 0)
      positives.emplace_back(iv, 1);
    else
      negatives.emplace_back(iv, -1);
  }

  // r and -r both roots <=> r is a root of gcd(s(x), s(-x))
  Polynomial mirrored = reflect(s);
  Polynomial g = gcd(s, mirrored);
  std::vector<ModulusWork> work;
  std::vector<std::pair<Interval, int>> tied_pos, tied_neg;
  if (g.degree() >= 1) {
    SturmSequence gseq(g);
    auto split_ties = [&](std::vector<std::pair<Interval, int>>& from, std::vector<std::pair<Interval, int>>& tied) {
      std::vector<std::pair<Interval, int>> keep;
      for (auto& m : from) (gseq.count(Region::open(m.first)) > 0 ? tied : keep).push_back(m);
      from.swap(keep);
    };
    split_ties(positives, tied_pos);
    split_ties(negatives, tied_neg);
  }
  // tied_pos ascends in modulus, tied_neg descends
  std::reverse(tied_neg.begin(), tied_neg.end());
  if (tied_pos.size() != tied_neg.size()) throw Error("modulus tie bookkeeping failed");
  for (std::size_t i = 0; i < tied_pos.size(); ++i) {
    ModulusWork w;
    w.members = {tied_pos[i], tied_neg[i]};
    w.cls.has_positive = w.cls.has_negative = true;
    work.push_back(std::move(w));
  }
  for (auto& m : positives) {
    ModulusWork w;
    w.members = {m};
    w.cls.has_positive = true;
    work.push_back(std::move(w));
  }
  for (auto& m : negatives) {
    ModulusWork w;
    w.members = {m};
    w.cls.has_negative = true;
    work.push_back(std::move(w));
  }
  for (auto& w : work) w.update();

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        if (!overlaps(work[i].cls.modulus, work[j].cls.modulus)) continue;
        for (auto* w : {&work[i], &work[j]}) {
          for (auto& [iv, sign] : w->members) iv = refine(seq, iv, iv.width() / 2);
          w->update();
        }
        changed = true;
      }
    }
  }
  std::sort(work.begin(), work.end(),
            [](const ModulusWork& a, const ModulusWork& b) { return a.cls.modulus.lo < b.cls.modulus.lo; });
  for (auto& w : work) out.push_back(w.cls);
  return out;
}

std::string modulus_signature(const Polynomial& p) {
  std::string out;
  for (const auto& c : modulus_classes(p)) {
    if (c.is_zero)
      out += "0";
    else if (c.has_positive && c.has_negative)
      out += "P=N";
    else
      out += c.has_positive ? "P" : "N";
  }
  return out;
}

}  // namespace descartes
