#pragma once

#include <optional>
#include <vector>

#include "quasihilb/poly.hpp"

namespace quasihilb {

// Rational generating function U(t) / (1 - t^k)^d with exact numerator.
// Invariants: U nonzero, k >= 1, d >= 1, deg U <= k*d - 1 (so every residue
// class of the coefficient sequence is eventually polynomial of degree < d).
class GenFun {
public:
  GenFun(RatPoly numerator, int period_bound, int pole_order);

  const RatPoly& numerator() const { return u_; }
  int period_bound() const { return k_; }  // k
  int pole_order() const { return d_; }    // d

private:
  RatPoly u_;
  int k_;
  int d_;
};

// One residue class of the numerator: the terms of U whose exponent is
// congruent to the class index mod k. degree is the true degree e of that
// part; reduced_degree is (e - index) / k, the degree seen through t^k.
// Both are disengaged when the part is zero.
struct NumeratorClass {
  RatPoly part;
  std::optional<int> degree;
  std::optional<int> reduced_degree;
};

struct NumeratorSplit {
  int period_bound = 0;
  std::vector<NumeratorClass> classes;  // size k, indexed by residue
};

NumeratorSplit split_numerator(const GenFun& f);

// First `count` power-series coefficients of U(t) / (1 - t^k)^d, exact.
std::vector<Rational> series_prefix(const GenFun& f, int count);

}  // namespace quasihilb
