#include "descartes/sign_pattern.hpp"

#include <algorithm>
#include <set>

#include "descartes/error.hpp"

namespace descartes {

SignPattern::SignPattern(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.size() < 2) throw PreconditionViolated("sign pattern needs length >= 2");
  for (auto s : signs_)
    if (s != 1 && s != -1) throw PreconditionViolated("sign pattern entries must be +1 or -1");
  if (signs_.front() != 1) throw PreconditionViolated("sign pattern must begin with +");
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<std::int8_t> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '+') {
      signs.push_back(1);
    } else if (ch == '-') {
      signs.push_back(-1);
    } else if (ch == '\xE2' && i + 2 < text.size() && text[i + 1] == '\x88' &&
               text[i + 2] == '\x92') {
      // U+2212 MINUS SIGN
      signs.push_back(-1);
      i += 2;
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '\t') {
      continue;
    } else {
      throw ParseError("unexpected character in sign pattern: '" + std::string(1, ch) + "'");
    }
  }
  if (signs.size() < 2 || signs.front() != 1)
    throw ParseError("sign pattern must have length >= 2 and begin with +");
  return SignPattern(std::move(signs));
}

std::string SignPattern::str() const {
  std::string out;
  out.reserve(signs_.size());
  for (auto s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::string Couple::str() const {
  return pattern.str() + " " + std::to_string(pair.pos) + " " + std::to_string(pair.neg);
}

Couple Couple::parse(std::string_view pattern, int pos, int neg) {
  if (pos < 0 || neg < 0) throw ParseError("pos and neg must be nonnegative");
  return Couple{SignPattern::parse(pattern), {pos, neg}};
}

ModulusOrder::ModulusOrder(std::string tokens) : tokens_(std::move(tokens)) {
  for (char t : tokens_)
    if (t != 'P' && t != 'N') throw PreconditionViolated("modulus order tokens must be P or N");
}

int ModulusOrder::positives() const {
  return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), 'P'));
}

int ModulusOrder::negatives() const {
  return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), 'N'));
}

std::string ModulusOrder::render() const {
  std::string out;
  int a = 0, b = 0;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += " < ";
    if (tokens_[i] == 'P')
      out += "a" + std::to_string(++a);
    else
      out += "b" + std::to_string(++b);
  }
  return out;
}

ChangesPreservations changes_preservations(const SignPattern& sp) {
  ChangesPreservations cp;
  for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
    if (sp[i] != sp[i + 1])
      ++cp.changes;
    else
      ++cp.preservations;
  }
  return cp;
}

bool compatible(const SignPattern& sp, PosNegPair pair) {
  if (pair.pos < 0 || pair.neg < 0) return false;
  auto [c, p] = changes_preservations(sp);
  return pair.pos <= c && (c - pair.pos) % 2 == 0 && pair.neg <= p && (p - pair.neg) % 2 == 0;
}

std::vector<PosNegPair> compatible_pairs(const SignPattern& sp) {
  auto [c, p] = changes_preservations(sp);
  std::vector<PosNegPair> out;
  for (int pos = c % 2; pos <= c; pos += 2)
    for (int neg = p % 2; neg <= p; neg += 2) out.push_back({pos, neg});
  return out;
}

ModulusOrder canonical_order(const SignPattern& sp) {
  std::string tokens;
  for (std::size_t i = sp.size() - 1; i >= 1; --i) tokens.push_back(sp[i] != sp[i - 1] ? 'P' : 'N');
  return ModulusOrder(std::move(tokens));
}

SignPattern reflect_pattern(const SignPattern& sp) {
  const int d = sp.degree();
  auto signs = sp.signs();
  for (int j = 0; j <= d; ++j)
    if ((d - j) % 2 == 1) signs[static_cast<std::size_t>(d - j)] = static_cast<std::int8_t>(-signs[static_cast<std::size_t>(d - j)]);
  return SignPattern(std::move(signs));
}

SignPattern reverse_pattern(const SignPattern& sp) {
  auto signs = sp.signs();
  std::reverse(signs.begin(), signs.end());
  if (signs.front() < 0)
    for (auto& s : signs) s = static_cast<std::int8_t>(-s);
  return SignPattern(std::move(signs));
}

Couple reflect_couple(const Couple& couple) {
  return Couple{reflect_pattern(couple.pattern), {couple.pair.neg, couple.pair.pos}};
}

Couple reverse_couple(const Couple& couple) {
  return Couple{reverse_pattern(couple.pattern), couple.pair};
}

std::vector<Couple> z2z2_orbit(const Couple& couple) {
  std::set<Couple> orbit{couple, reflect_couple(couple), reverse_couple(couple),
                         reverse_couple(reflect_couple(couple))};
  return {orbit.begin(), orbit.end()};
}

SignPattern make_D(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionViolated("D(a,b,c) needs a, b, c >= 1");
  std::vector<std::int8_t> signs;
  signs.insert(signs.end(), static_cast<std::size_t>(2 * a), 1);
  for (int k = 0; k < b; ++k) {
    signs.push_back(-1);
    signs.push_back(1);
  }
  signs.insert(signs.end(), static_cast<std::size_t>(2 * c), -1);
  return SignPattern(std::move(signs));
}

std::optional<DShape> is_D(const SignPattern& sp) {
  const auto& s = sp.signs();
  const std::size_t n = s.size();
  if (n % 2 != 0) return std::nullopt;
  std::size_t i = 0;
  while (i < n && s[i] == 1) ++i;
  if (i == 0 || i % 2 != 0) return std::nullopt;
  DShape shape{static_cast<int>(i / 2), 0, 0};
  while (i + 1 < n && s[i] == -1 && s[i + 1] == 1) {
    ++shape.b;
    i += 2;
  }
  const std::size_t tail = n - i;
  if (shape.b == 0 || tail == 0 || tail % 2 != 0) return std::nullopt;
  for (; i < n; ++i)
    if (s[i] != -1) return std::nullopt;
  shape.c = static_cast<int>(tail / 2);
  return shape;
}

SignPattern sigma_bullet(int d) {
  if (d < 4) throw DegreeTooSmall("sigma_bullet needs d >= 4, got " + std::to_string(d));
  std::vector<std::int8_t> signs(static_cast<std::size_t>(d + 1), 1);
  signs[1] = -1;
  signs[static_cast<std::size_t>(d - 1)] = -1;
  return SignPattern(std::move(signs));
}

bool case12_detect(const SignPattern& sp, PosNegPair pair) {
  const int d = sp.degree();
  if (pair.pos + pair.neg != 2)
    throw PreconditionViolated("case12_detect needs pos + neg = 2");
  if (d % 2 != 0) throw PreconditionViolated("case12_detect needs even degree");
  if (sp.sign_of_degree(0) < 0) return false;
  bool odd_all_pos = true, odd_all_neg = true, some_even_neg = false;
  for (int j = 0; j < d; ++j) {
    const int s = sp.sign_of_degree(j);
    if (j % 2 == 1) {
      odd_all_pos = odd_all_pos && s > 0;
      odd_all_neg = odd_all_neg && s < 0;
    } else if (s < 0) {
      some_even_neg = true;
    }
  }
  if (!some_even_neg) return false;
  if (odd_all_pos && pair == PosNegPair{2, 0}) return true;
  if (odd_all_neg && pair == PosNegPair{0, 2}) return true;
  return false;
}

std::vector<SignPattern> all_patterns(int d) {
  if (d < 1 || d > 24) throw PreconditionViolated("all_patterns supports 1 <= d <= 24");
  std::vector<SignPattern> out;
  const std::uint32_t count = 1u << d;
  out.reserve(count);
  // bit k (from the most significant) set means '+' at position k + 1; '-' sorts first
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<std::int8_t> signs(static_cast<std::size_t>(d + 1), 1);
    for (int k = 0; k < d; ++k)
      signs[static_cast<std::size_t>(k + 1)] = (mask >> (d - 1 - k)) & 1u ? 1 : -1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

int pair_universe_size(int d) {
  int count = 0;
  for (int pos = 0; pos <= d; ++pos)
    for (int neg = 0; pos + neg <= d; ++neg)
      if ((d - pos - neg) % 2 == 0) ++count;
  return count;
}

}  // namespace descartes
