#include "quasihilb/poly.hpp"

#include <sstream>

namespace quasihilb {

namespace {
const Rational kZero{};
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) raise(Errc::exponent_out_of_range, "monomial with negative exponent");
  if (c.is_zero()) return RatPoly();
  std::vector<Rational> v(static_cast<size_t>(exponent) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

const Rational& RatPoly::coeff(int j) const {
  if (j < 0 || static_cast<size_t>(j) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(j)];
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) raise(Errc::zero_divisor, "leading coefficient of zero polynomial");
  return c_.back();
}

int RatPoly::valuation() const {
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return static_cast<int>(j);
  raise(Errc::zero_divisor, "valuation of zero polynomial");
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc;
  for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s.is_zero()) { c_.clear(); return *this; }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly operator-(const RatPoly& a) {
  std::vector<Rational> v(a.c_.size());
  for (size_t j = 0; j < v.size(); ++j) v[j] = -a.c_[j];
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

DivRem divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) raise(Errc::zero_divisor, "polynomial division by zero");
  RatPoly r = a;
  std::vector<Rational> q;
  int db = *b.degree();
  while (!r.is_zero() && *r.degree() >= db) {
    int dr = *r.degree();
    Rational f = r.leading() / b.leading();
    int e = dr - db;
    if (static_cast<size_t>(e) >= q.size()) q.resize(static_cast<size_t>(e) + 1);
    q[static_cast<size_t>(e)] = f;
    r -= RatPoly::monomial(f, e) * b;
  }
  return {RatPoly(std::move(q)), std::move(r)};
}

RatPoly shift(const RatPoly& p, const Rational& s) {
  // Horner in (x + s): exact, O(deg^2) coefficient operations.
  RatPoly binom({s, Rational(1)});
  RatPoly acc;
  for (size_t j = p.coefficients().size(); j-- > 0;)
    acc = acc * binom + RatPoly::constant(p.coefficients()[j]);
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return RatPoly();
  std::vector<Rational> v(c.size() - 1);
  for (size_t j = 1; j < c.size(); ++j) v[j - 1] = Rational(static_cast<long>(j)) * c[j];
  return RatPoly(std::move(v));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x *= Rational(1) / x.leading();
  return x;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_constant()) return p;
  return divrem(p, gcd(p, derivative(p))).quotient;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  // Yun: works over characteristic zero, multiplicities come out exact.
  RatPoly a = p * (Rational(1) / p.leading());
  RatPoly da = derivative(a);
  RatPoly g = gcd(a, da);
  RatPoly w = divrem(a, g).quotient;
  RatPoly z = divrem(da, g).quotient - derivative(w);
  int m = 1;
  while (!w.is_constant()) {
    RatPoly f = gcd(w, z);
    if (!f.is_constant()) out.push_back({f, m});
    w = divrem(w, f).quotient;
    z = divrem(z, f).quotient - derivative(w);
    ++m;
  }
  return out;
}

RatPoly poly_from_roots(const std::vector<Rational>& roots) {
  RatPoly p = RatPoly::constant(Rational(1));
  for (const auto& r : roots) p *= RatPoly({-r, Rational(1)});
  return p;
}

RatPoly strip_power(const RatPoly& p, int m) {
  if (m < 0) raise(Errc::exponent_out_of_range, "strip_power with negative exponent");
  if (m == 0) return p;
  const auto& c = p.coefficients();
  if (c.size() < static_cast<size_t>(m))
    raise(Errc::zero_divisor, "strip_power beyond polynomial degree");
  for (int j = 0; j < m; ++j)
    if (!c[static_cast<size_t>(j)].is_zero())
      raise(Errc::zero_divisor, "strip_power would drop a nonzero coefficient");
  return RatPoly(std::vector<Rational>(c.begin() + m, c.end()));
}

std::string to_pretty_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    Rational a = c[j];
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool unit = (a == Rational(1));
    if (j == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

}  // namespace quasihilb
