#include "quasihilb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace quasihilb {

namespace {

using cplx = std::complex<double>;

std::vector<double> to_doubles(const RatPoly& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.push_back(a.to_double());
  return c;
}

cplx horner(const std::vector<double>& c, cplx z) {
  cplx acc = 0.0;
  for (size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
  return acc;
}

// p(z) and p'(z) in one pass.
std::pair<cplx, cplx> horner2(const std::vector<double>& c, cplx z) {
  cplx p = 0.0, dp = 0.0;
  for (size_t j = c.size(); j-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
  return {p, dp};
}

double coeff_scale(const std::vector<double>& c, double az) {
  double s = 0.0, t = 1.0;
  for (double a : c) {
    s += std::abs(a) * t;
    t *= az;
  }
  return std::max(1.0, s);
}

double backward_error(const std::vector<double>& c, cplx z) {
  return std::abs(horner(c, z)) / coeff_scale(c, std::abs(z));
}

// Roots of one square-free monic coefficient vector (c.back() == 1, c[0] != 0).
std::vector<cplx> aberth(const std::vector<double>& c, int max_iterations) {
  int m = static_cast<int>(c.size()) - 1;
  std::vector<cplx> z(static_cast<size_t>(m));
  // Deterministic ring start: radius from |c0|^(1/m), fixed angular offset so
  // no guess sits on a coordinate axis.
  double radius = std::pow(std::abs(c[0]), 1.0 / m);
  radius = std::clamp(radius, 1e-3, 1e6) * 1.1;
  for (int j = 0; j < m; ++j) {
    double ang = 2.0 * std::numbers::pi * (j + 0.3729) / m + 0.5;
    z[static_cast<size_t>(j)] = std::polar(radius, ang);
  }

  const double eps_stop = 1e-15;
  for (int it = 0; it < max_iterations; ++it) {
    bool moved = false;
    for (int j = 0; j < m; ++j) {
      cplx& zj = z[static_cast<size_t>(j)];
      auto [p, dp] = horner2(c, zj);
      if (std::abs(p) <= eps_stop * coeff_scale(c, std::abs(zj))) continue;
      if (p == 0.0) continue;
      if (dp == 0.0) {  // stationary start, nudge off
        zj += cplx(1e-8 * (1.0 + std::abs(zj)), 1e-8);
        moved = true;
        continue;
      }
      cplx newton = p / dp;
      cplx sum = 0.0;
      for (int l = 0; l < m; ++l)
        if (l != j) sum += 1.0 / (zj - z[static_cast<size_t>(l)]);
      cplx denom = 1.0 - newton * sum;
      cplx w = (denom == 0.0) ? newton : newton / denom;
      zj -= w;
      if (std::abs(w) > 1e-14 * (1.0 + std::abs(zj))) moved = true;
    }
    if (!moved) return z;
  }
  raise(Errc::root_finding_diverged,
        "Aberth iteration did not settle in " + std::to_string(max_iterations) + " sweeps");
}

void newton_polish(const std::vector<double>& c, cplx& z) {
  for (int it = 0; it < 3; ++it) {
    auto [p, dp] = horner2(c, z);
    if (dp == 0.0) return;
    cplx step = p / dp;
    if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) return;  // keep polish local
    z -= step;
  }
}

}  // namespace

std::complex<double> eval_complex(const RatPoly& p, std::complex<double> z) {
  return horner(to_doubles(p), z);
}

std::vector<ComplexRoot> find_roots(const RatPoly& p, const RootFindingOptions& opts) {
  if (p.is_zero()) raise(Errc::zero_divisor, "roots of the zero polynomial");
  std::vector<ComplexRoot> out;
  if (p.is_constant()) return out;

  // Monic double image of the full input, for residual reporting.
  RatPoly monic = p * (Rational(1) / p.leading());
  std::vector<double> full = to_doubles(monic);

  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    RatPoly g = factor;
    // A square-free factor can carry at most a simple root at the origin;
    // peel it off exactly so the ring start radius is well defined.
    if (g.coeff(0).is_zero()) {
      out.push_back({0.0, 0.0, multiplicity, backward_error(full, 0.0)});
      g = strip_power(g, 1);
    }
    if (g.is_constant()) continue;
    if (*g.degree() == 1) {
      // Exact rational root, rounded once on conversion.
      double r = (-g.coeff(0) / g.coeff(1)).to_double();
      out.push_back({r, 0.0, multiplicity, backward_error(full, r)});
      continue;
    }
    std::vector<double> c = to_doubles(g);
    double lead = c.back();
    for (auto& a : c) a /= lead;
    std::vector<cplx> zs = aberth(c, opts.max_iterations);
    for (cplx& z : zs) {
      newton_polish(c, z);
      out.push_back({z.real(), z.imag(), multiplicity, backward_error(full, z)});
    }
  }

  for (const auto& r : out)
    if (!(r.residual <= opts.tolerance))
      raise(Errc::root_finding_diverged,
            "residual " + std::to_string(r.residual) + " above tolerance at root (" +
                std::to_string(r.re) + ", " + std::to_string(r.im) + ")");

  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

std::vector<ComplexRoot> find_roots(const RatPoly& p, double tolerance) {
  RootFindingOptions opts;
  opts.tolerance = tolerance;
  return find_roots(p, opts);
}

}  // namespace quasihilb
