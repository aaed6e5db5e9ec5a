#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quasihilb/rational.hpp"

namespace quasihilb {

// Dense univariate polynomial over Rational; coefficients()[j] multiplies x^j.
// Always normalized: no trailing zero coefficient is stored, and the zero
// polynomial is the empty vector (its degree() is nullopt, never -1).
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly monomial(const Rational& c, int exponent);

  const std::vector<Rational>& coefficients() const { return c_; }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of x^j; zero outside the stored range.
  const Rational& coeff(int j) const;
  const Rational& leading() const;  // precondition: not zero
  int valuation() const;            // index of lowest nonzero coefficient; precondition: not zero

  Rational operator()(const Rational& x) const;  // Horner

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }
  RatPoly& operator*=(const Rational& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s) { a *= s; return a; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { a *= s; return a; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

private:
  void normalize();
  std::vector<Rational> c_;
};

struct DivRem {
  RatPoly quotient;
  RatPoly remainder;
};

// Euclidean division: a = quotient * b + remainder with deg(remainder) < deg(b).
// Throws ZeroDivisor when b is zero.
DivRem divrem(const RatPoly& a, const RatPoly& b);

// p(x + s), computed exactly.
RatPoly shift(const RatPoly& p, const Rational& s);

RatPoly derivative(const RatPoly& p);

// Monic gcd; gcd(p, 0) is p made monic, gcd(0, 0) is zero.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// p / gcd(p, p'): same distinct roots, all simple. Keeps p's leading coefficient.
RatPoly squarefree_part(const RatPoly& p);

struct SquarefreeFactor {
  RatPoly factor;  // monic, squarefree
  int multiplicity;
};

// Yun's decomposition: p = lc * prod factor_i^multiplicity_i, multiplicities
// strictly increasing, factors pairwise coprime. Empty for constants.
std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p);

// prod (x - r) over the given roots.
RatPoly poly_from_roots(const std::vector<Rational>& roots);

// Quotient of p by x^m; the m lowest coefficients must all be zero.
RatPoly strip_power(const RatPoly& p, int m);

// Human-readable form, lowest degree first: "1 - 1/2*n + n^3".
std::string to_pretty_string(const RatPoly& p, const std::string& var = "x");

}  // namespace quasihilb
