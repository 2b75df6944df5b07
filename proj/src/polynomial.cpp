#include "descartes/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "descartes/error.hpp"
#include "detail/integer_poly.hpp"

namespace descartes {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  if (!valid_integer(num, true)) throw ParseError("bad coefficient '" + std::string(token) + "'");
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(Integer(num_str, 10));
  std::string_view den = token.substr(slash + 1);
  if (!valid_integer(den, false)) throw ParseError("bad coefficient '" + std::string(token) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  Rational q(Integer(num_str, 10), d);
  q.canonicalize();
  return q;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return;
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Polynomial from_integers(const std::vector<Integer>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending)
    : Polynomial(std::vector<Rational>(ascending)) {}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw PreconditionViolated("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(j)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw PreconditionViolated("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Polynomial Polynomial::monic() const {
  Rational lc = leading();
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out.push_back(' ');
    out += coeffs_[i].get_str();
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) coeffs.push_back(parse_rational(text.substr(i, j - i)));
    i = j;
  }
  if (coeffs.empty()) throw ParseError("empty polynomial text");
  return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionViolated("division by the zero polynomial");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Integer> primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer n = c.get_num() * (l / c.get_den());
    v.push_back(std::move(n));
  }
  make_primitive(v);
  return v;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto x = primitive_integer(a);
  auto y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = detail::positive_prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integers(x).monic();
}

Polynomial derivative(const Polynomial& p, int m) {
  if (m < 0) throw PreconditionViolated("negative derivative order");
  if (m > p.degree()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() - m + 1));
  for (int j = m; j <= p.degree(); ++j) {
    Integer ff = 1;
    for (int k = 0; k < m; ++k) ff *= (j - k);
    out[static_cast<std::size_t>(j - m)] = p.coeffs()[static_cast<std::size_t>(j)] * Rational(ff);
  }
  return Polynomial(std::move(out));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  const int d = p.degree();
  for (int j = 0; j <= d; ++j)
    if ((d - j) % 2 == 1) c[static_cast<std::size_t>(j)] = -c[static_cast<std::size_t>(j)];
  return Polynomial(std::move(c));
}

Polynomial reverse(const Polynomial& p) {
  if (p.is_zero() || p.coeff(0) == 0) throw ZeroConstantTerm();
  std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial(std::move(c)).monic();
}

Polynomial rescale(const Polynomial& p, const Rational& s) {
  if (s == 0) throw PreconditionViolated("rescale by zero");
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  Rational f = 1;
  for (auto& x : c) {
    x *= f;
    f *= s;
  }
  return Polynomial(std::move(c));
}

Polynomial factor_out_root(const Polynomial& p, const Rational& r) {
  if (p.is_zero() || p(r) != 0) throw NotARoot("value " + r.get_str() + " is not a root");
  // synthetic division
  const int d = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(d));
  Rational carry = 0;
  for (int j = d; j >= 1; --j) {
    carry = p.coeffs()[static_cast<std::size_t>(j)] + carry * r;
    q[static_cast<std::size_t>(j - 1)] = carry;
  }
  return Polynomial(std::move(q));
}

Polynomial odd_part(const Polynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t j = 0; j < c.size(); j += 2) c[j] = 0;
  return Polynomial(std::move(c));
}

Polynomial even_part(const Polynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = 0;
  return Polynomial(std::move(c));
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Polynomial::constant(1);
  Polynomial g = gcd(p, derivative(p));
  return divmod(p, g).first.monic();
}

SignPattern sign_pattern_of(const Polynomial& p) {
  if (p.degree() < 1) throw PreconditionViolated("sign pattern needs degree >= 1");
  const int lead = sgn(p.leading());
  std::vector<std::int8_t> signs;
  signs.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int j = p.degree(); j >= 0; --j) {
    const int s = sgn(p.coeffs()[static_cast<std::size_t>(j)]) * lead;
    if (s == 0) throw ZeroCoefficient(j);
    signs.push_back(static_cast<std::int8_t>(s));
  }
  return SignPattern(std::move(signs));
}

Polynomial pattern_template(const SignPattern& sp) {
  std::vector<Rational> c(sp.size());
  for (int j = 0; j <= sp.degree(); ++j) c[static_cast<std::size_t>(j)] = sp.sign_of_degree(j);
  return Polynomial(std::move(c));
}

}  // namespace descartes
