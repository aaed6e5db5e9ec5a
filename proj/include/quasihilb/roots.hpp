#pragma once

#include <complex>
#include <vector>

#include "quasihilb/poly.hpp"

namespace quasihilb {

// One complex root of a rational polynomial. residual is the backward error
// |p(z)| / max(1, sum |a_j| |z|^j) of the monic polynomial, so it is
// scale-free and comparable across wildly different root magnitudes.
struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
  double residual = 0.0;
};

struct RootFindingOptions {
  double tolerance = 1e-9;   // residual bound after polishing
  int max_iterations = 200;  // Aberth sweeps per square-free factor
};

// All complex roots with exact multiplicities. Multiplicities come from the
// square-free decomposition, so every numeric solve sees only simple roots;
// Aberth-Ehrlich iteration from deterministic ring guesses, Newton polish.
// Output sorted by (re, im). Throws RootFindingDiverged when a factor fails
// to converge or a residual stays above tolerance.
std::vector<ComplexRoot> find_roots(const RatPoly& p, const RootFindingOptions& opts);
std::vector<ComplexRoot> find_roots(const RatPoly& p, double tolerance = 1e-9);

std::complex<double> eval_complex(const RatPoly& p, std::complex<double> z);

}  // namespace quasihilb
