#include "quasihilb/quasipoly.hpp"

#include <string>

namespace quasihilb {

RatPoly trivial_factor(int a, int k, int i) {
  RatPoly p = RatPoly::constant(Rational(1));
  for (int j = 1; j <= a; ++j)
    p *= RatPoly({Rational(static_cast<long>(j) * k - i), Rational(1)});
  return p;
}

std::pair<int, RatPoly> constituent_single_power(const Rational& c, int exponent, int k, int d) {
  if (exponent < 0 || exponent > k * d - 1)
    raise(Errc::exponent_out_of_range,
          "term exponent " + std::to_string(exponent) + " outside [0, " +
              std::to_string(k * d - 1) + "]");
  int r = exponent % k;
  RatPoly p = RatPoly::constant(c / (factorial(d - 1) * pow(Rational(k), d - 1)));
  for (int m = 1; m <= d - 1; ++m)
    p *= RatPoly({Rational(static_cast<long>(m) * k - exponent), Rational(1)});
  return {r, p};
}

QuasiPoly constituents_closed_form(const GenFun& f) {
  int k = f.period_bound();
  QuasiPoly qp;
  qp.period_bound = k;
  qp.constituents.assign(static_cast<size_t>(k), RatPoly());
  const auto& c = f.numerator().coefficients();
  for (size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    auto [r, p] = constituent_single_power(c[e], static_cast<int>(e), k, f.pole_order());
    qp.constituents[static_cast<size_t>(r)] += p;
  }
  return qp;
}

QuasiPoly interpolate_constituents(const std::vector<Rational>& series, int k, int d) {
  if (k < 1 || d < 1) raise(Errc::invalid_genfun, "interpolation needs k >= 1 and d >= 1");
  if (static_cast<int>(series.size()) < k * d)
    raise(Errc::not_enough_samples, "need " + std::to_string(k * d) + " series values, have " +
                                        std::to_string(series.size()));
  QuasiPoly qp;
  qp.period_bound = k;
  qp.constituents.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    // Lagrange through the d nodes of this residue class.
    RatPoly h;
    for (int m = 0; m < d; ++m) {
      const Rational& y = series[static_cast<size_t>(i + m * k)];
      if (y.is_zero()) continue;
      RatPoly basis = RatPoly::constant(Rational(1));
      Rational denom(1);
      for (int l = 0; l < d; ++l) {
        if (l == m) continue;
        basis *= RatPoly({Rational(-(static_cast<long>(i) + static_cast<long>(l) * k)), Rational(1)});
        denom *= Rational(static_cast<long>(m - l) * k);
      }
      h += basis * (y / denom);
    }
    qp.constituents.push_back(std::move(h));
  }
  return qp;
}

FactoredConstituent factor_constituent(const GenFun& f, int class_index) {
  int k = f.period_bound();
  int d = f.pole_order();
  if (class_index < 0 || class_index >= k)
    raise(Errc::usage, "class index " + std::to_string(class_index) + " outside [0, " +
                           std::to_string(k - 1) + "]");
  NumeratorSplit split = split_numerator(f);
  const NumeratorClass& cls = split.classes[static_cast<size_t>(class_index)];
  if (cls.part.is_zero())
    raise(Errc::empty_class,
          "numerator has no terms in residue class " + std::to_string(class_index));

  FactoredConstituent fc;
  fc.class_index = class_index;
  fc.period_bound = k;
  fc.pole_order = d;
  fc.reduced_degree = *cls.reduced_degree;
  fc.scale = Rational(1) / (factorial(d - 1) * pow(Rational(k), d - 1));
  fc.trivial = trivial_factor(d - 1 - fc.reduced_degree, k, class_index);

  // Constituent of this class only: sum the closed form over the class part.
  RatPoly h;
  const auto& c = cls.part.coefficients();
  for (size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    h += constituent_single_power(c[e], static_cast<int>(e), k, d).second;
  }
  fc.constituent = h;

  DivRem dr = divrem(h * (Rational(1) / fc.scale), fc.trivial);
  if (!dr.remainder.is_zero())
    raise(Errc::theorem_violation,
          "forced factor does not divide constituent of class " + std::to_string(class_index));
  fc.cofactor = std::move(dr.quotient);
  return fc;
}

std::vector<long> forced_integer_roots(const FactoredConstituent& fc) {
  std::vector<long> roots;
  int a = fc.pole_order - 1 - fc.reduced_degree;
  for (int j = 1; j <= a; ++j)
    roots.push_back(static_cast<long>(fc.class_index) - static_cast<long>(j) * fc.period_bound);
  return roots;
}

RatPoly product_poly(const QuasiPoly& qp) {
  RatPoly p = RatPoly::constant(Rational(1));
  for (const auto& h : qp.constituents) p *= h;
  return p;
}

}  // namespace quasihilb
