#include "quasihilb/rootcert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quasihilb/sturm.hpp"

namespace quasihilb {

namespace {

// Exact zero checks of the full constituent at the forced integer roots.
std::vector<long> verify_trivial_roots(const FactoredConstituent& fc) {
  std::vector<long> roots = forced_integer_roots(fc);
  for (long r : roots)
    if (!fc.constituent(Rational(r)).is_zero())
      raise(Errc::theorem_violation, "constituent of class " + std::to_string(fc.class_index) +
                                         " does not vanish at forced root " + std::to_string(r));
  return roots;
}

RatPoly reversed(const RatPoly& p) {
  std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
  return RatPoly(std::move(c));
}

}  // namespace

const char* to_string(LineStatus s) {
  switch (s) {
    case LineStatus::exact_certified: return "exact-certified";
    case LineStatus::numeric_pass: return "numeric-pass";
    case LineStatus::numeric_fail: return "numeric-fail";
    case LineStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(CertMethod m) {
  switch (m) {
    case CertMethod::sturm: return "sturm";
    case CertMethod::aberth: return "aberth";
    case CertMethod::none: return "none";
  }
  return "?";
}

Rational critical_abscissa(const FactoredConstituent& fc) {
  long k = fc.period_bound;
  long d = fc.pole_order;
  long q = fc.reduced_degree;
  long i = fc.class_index;
  return Rational(-((d - q) * k - 2 * i), 2);
}

UnitCircleReport check_unit_circle(const NumeratorSplit& split, int class_index,
                                   double tolerance) {
  if (class_index < 0 || class_index >= split.period_bound)
    raise(Errc::usage, "class index out of range");
  const NumeratorClass& cls = split.classes[static_cast<size_t>(class_index)];
  if (cls.part.is_zero())
    raise(Errc::empty_class, "residue class " + std::to_string(class_index) + " is empty");

  UnitCircleReport rep;
  rep.class_index = class_index;
  rep.tolerance = tolerance;
  rep.stripped_power = cls.part.valuation();
  RatPoly v = strip_power(cls.part, rep.stripped_power);

  rep.at_one_nonzero = !v(Rational(1)).is_zero();
  RatPoly rev = reversed(v);
  rep.self_inversive = (rev == v) || (rev == -v);

  if (!v.is_constant()) {
    rep.roots = find_roots(v, tolerance);
    for (const auto& r : rep.roots) {
      double dev = std::abs(std::hypot(r.re, r.im) - 1.0);
      rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, dev);
    }
  }
  rep.hypothesis_holds =
      rep.at_one_nonzero && rep.self_inversive && rep.max_modulus_deviation <= tolerance;
  return rep;
}

RootCertificate certify_critical_line_numeric(const FactoredConstituent& fc, double tolerance) {
  RootCertificate cert;
  cert.class_index = fc.class_index;
  cert.reduced_degree = fc.reduced_degree;
  cert.abscissa = critical_abscissa(fc);
  cert.tolerance = tolerance;
  cert.trivial_roots_verified = verify_trivial_roots(fc);
  cert.method = CertMethod::aberth;

  if (fc.cofactor.is_constant()) {
    cert.line_status = LineStatus::numeric_pass;
    cert.note = "cofactor has no roots";
    return cert;
  }
  double line = cert.abscissa.to_double();
  auto roots = find_roots(fc.cofactor, tolerance);
  const ComplexRoot* worst = nullptr;
  for (const auto& r : roots) {
    double dev = std::abs(r.re - line);
    if (dev > cert.max_real_deviation) {
      cert.max_real_deviation = dev;
      worst = &r;
    }
  }
  if (cert.max_real_deviation <= tolerance) {
    cert.line_status = LineStatus::numeric_pass;
  } else {
    cert.line_status = LineStatus::numeric_fail;
    if (worst) cert.witness = *worst;
  }
  return cert;
}

RootCertificate certify_critical_line_exact(const FactoredConstituent& fc, double tolerance) {
  RootCertificate cert;
  cert.class_index = fc.class_index;
  cert.reduced_degree = fc.reduced_degree;
  cert.abscissa = critical_abscissa(fc);
  cert.tolerance = tolerance;
  cert.trivial_roots_verified = verify_trivial_roots(fc);
  cert.method = CertMethod::sturm;

  if (fc.cofactor.is_constant()) {
    cert.line_status = LineStatus::exact_certified;
    cert.note = "cofactor has no roots";
    return cert;
  }

  auto fall_back = [&](const std::string& why) {
    RootCertificate num = certify_critical_line_numeric(fc, tolerance);
    num.note = why + "; fell back to numeric roots";
    return num;
  };

  // g(y) = cofactor(y + abscissa): roots on the line become purely imaginary.
  RatPoly g = shift(fc.cofactor, cert.abscissa);
  int at_centre = g.valuation();  // root at the critical point itself is on the line
  RatPoly gs = strip_power(g, at_centre);

  // Purely imaginary roots force an even polynomial.
  for (size_t j = 1; j < gs.coefficients().size(); j += 2)
    if (!gs.coefficients()[j].is_zero())
      return fall_back("recentred cofactor is not even (odd coefficient at index " +
                       std::to_string(j) + ")");

  // gs(y) = w(y^2); all roots of gs imaginary iff all roots of w real and
  // negative iff w(-z) has all roots real and positive.
  std::vector<Rational> wc;
  for (size_t j = 0; j < gs.coefficients().size(); j += 2) wc.push_back(gs.coefficients()[j]);
  RatPoly w(std::move(wc));
  std::vector<Rational> wn = w.coefficients();
  for (size_t j = 1; j < wn.size(); j += 2) wn[j] = -wn[j];
  RatPoly wneg(std::move(wn));

  SturmChain chain(wneg);
  int distinct = *chain.squarefree().degree();
  int positive = count_real_roots(chain, Rational(0), std::nullopt);
  if (positive != distinct)
    return fall_back("Sturm count found " + std::to_string(positive) + " of " +
                     std::to_string(distinct) + " distinct roots on the positive axis");

  cert.line_status = LineStatus::exact_certified;
  return cert;
}

GenFun generate_unit_circle_family(int k, int d, int class_index,
                                   const std::vector<UnityStep>& steps, const Rational& coeff) {
  if (k < 1 || d < 1) raise(Errc::invalid_genfun, "need k >= 1 and d >= 1");
  if (class_index < 0 || class_index >= k) raise(Errc::usage, "class index out of range");
  if (coeff.is_zero()) raise(Errc::zero_numerator, "leading coefficient must be nonzero");

  RatPoly u = RatPoly::monomial(coeff, class_index);
  for (const auto& step : steps) {
    if (step.den < 1)
      raise(Errc::usage, "unity step denominator must be >= 1");
    long n = ((step.num % step.den) + step.den) % step.den;
    long order = step.den / std::gcd(n, step.den);  // gcd(0, den) = den, so order 1 for n = 0
    if (order == 1)
      raise(Errc::root_at_one_forbidden,
            "step " + std::to_string(step.num) + "/" + std::to_string(step.den) +
                " reduces to the root 1, which the hypothesis excludes");

    RatPoly factor;
    if (order == 2) {
      // root -1: factor t^k + 1
      std::vector<Rational> c(static_cast<size_t>(k) + 1);
      c[0] = Rational(1);
      c.back() = Rational(1);
      factor = RatPoly(std::move(c));
    } else if (order == 3 || order == 4 || order == 6) {
      // conjugate pair: t^{2k} - 2cos(2 pi /order) t^k + 1, with 2cos rational
      Rational twocos = (order == 3) ? Rational(-1) : (order == 4) ? Rational(0) : Rational(1);
      std::vector<Rational> c(2 * static_cast<size_t>(k) + 1);
      c[0] = Rational(1);
      c[static_cast<size_t>(k)] = -twocos;
      c.back() = Rational(1);
      factor = RatPoly(std::move(c));
    } else {
      raise(Errc::irrational_coefficients,
            "2cos(2 pi " + std::to_string(step.num) + "/" + std::to_string(step.den) +
                ") is irrational; only orders 2, 3, 4, 6 have rational factors");
    }
    u *= factor;
  }
  // GenFun's constructor enforces the degree budget deg U <= k*d - 1.
  return GenFun(std::move(u), k, d);
}

TheoremSuiteResult verify_theorem_suite(const GenFun& f, double tolerance) {
  TheoremSuiteResult result;
  NumeratorSplit split = split_numerator(f);
  int k = f.period_bound();

  bool all_nonzero = true;
  int first_empty = -1;
  for (int i = 0; i < k; ++i) {
    ClassVerification cv;
    cv.class_index = i;
    if (split.classes[static_cast<size_t>(i)].part.is_zero()) {
      cv.empty = true;
      all_nonzero = false;
      if (first_empty < 0) first_empty = i;
      result.classes.push_back(std::move(cv));
      continue;
    }
    cv.unit_circle = check_unit_circle(split, i, tolerance);
    FactoredConstituent fc = factor_constituent(f, i);
    if (cv.unit_circle->hypothesis_holds) {
      cv.certificate = certify_critical_line_exact(fc, tolerance);
      if (cv.certificate->line_status == LineStatus::numeric_fail) result.asserted_failure = true;
    } else {
      RootCertificate cert;
      cert.class_index = i;
      cert.reduced_degree = fc.reduced_degree;
      cert.abscissa = critical_abscissa(fc);
      cert.tolerance = tolerance;
      cert.trivial_roots_verified = verify_trivial_roots(fc);
      cert.line_status = LineStatus::not_applicable;
      cert.method = CertMethod::none;
      cert.note = "unit-circle hypothesis fails for this class; no line is claimed";
      cv.certificate = std::move(cert);
    }
    result.classes.push_back(std::move(cv));
  }

  if (!all_nonzero) {
    result.global.applicable = false;
    result.global.reason =
        "residue class " + std::to_string(first_empty) + " of the numerator is empty";
    return result;
  }
  result.global.applicable = true;
  int e = *f.numerator().degree();
  long upto = static_cast<long>(f.pole_order()) * k - e - 1;
  RatPoly prod = product_poly(constituents_closed_form(f));
  for (long n = 1; n <= upto; ++n) {
    result.global.roots_checked.push_back(-n);
    if (!prod(Rational(-n)).is_zero())
      raise(Errc::theorem_violation,
            "constituent product does not vanish at " + std::to_string(-n));
  }
  result.global.verified = true;
  return result;
}

}  // namespace quasihilb
