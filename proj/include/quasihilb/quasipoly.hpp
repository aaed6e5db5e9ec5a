#pragma once

#include <utility>
#include <vector>

#include "quasihilb/genfun.hpp"

namespace quasihilb {

// Quasipolynomial with period k: constituents[i](n) gives the coefficient of
// t^n whenever n ≡ i (mod k) and n is large enough (here: all n >= 0, since
// the numerator degree stays below k*d). A constituent may be zero.
struct QuasiPoly {
  int period_bound = 0;
  std::vector<RatPoly> constituents;
};

// prod_{j=1..a} (x + j*k - i); empty product (a < 1) is 1. Every root is the
// integer i - j*k.
RatPoly trivial_factor(int a, int k, int i);

// Constituent of c * t^e / (1 - t^k)^d on the residue class of e:
//   (c / ((d-1)! k^{d-1})) * prod_{m=1..d-1} (n + m*k - e).
// Returns {e mod k, polynomial}. Throws ExponentOutOfRange unless 0 <= e <= k*d-1.
std::pair<int, RatPoly> constituent_single_power(const Rational& c, int exponent, int k, int d);

// All k constituents by summing single-power contributions over U's terms.
QuasiPoly constituents_closed_form(const GenFun& f);

// All k constituents recovered from series values alone: class i is
// interpolated at the d nodes i, i+k, ..., i+(d-1)k. Needs series.size() >= k*d
// (throws NotEnoughSamples otherwise).
QuasiPoly interpolate_constituents(const std::vector<Rational>& series, int k, int d);

// Constituent split as scale * trivial * cofactor with the forced integer-root
// factor pulled out. The division is exact by construction; a nonzero
// remainder would falsify the closed form and raises TheoremViolation.
struct FactoredConstituent {
  int class_index = 0;
  int period_bound = 0;   // k
  int pole_order = 0;     // d
  int reduced_degree = 0; // q: degree of the class numerator through t^k
  Rational scale;         // 1 / ((d-1)! k^{d-1})
  RatPoly trivial;        // trivial_factor(d - 1 - q, k, class_index)
  RatPoly cofactor;       // constituent / (scale * trivial)
  RatPoly constituent;    // the full constituent, kept for independent checks
};

// Throws EmptyClass when class_index has no numerator terms.
FactoredConstituent factor_constituent(const GenFun& f, int class_index);

std::vector<long> forced_integer_roots(const FactoredConstituent& fc);

// Product of all constituents; zero iff some constituent is zero.
RatPoly product_poly(const QuasiPoly& qp);

}  // namespace quasihilb
