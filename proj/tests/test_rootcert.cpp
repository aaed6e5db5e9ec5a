#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quasihilb/cli.hpp"
#include "quasihilb/rootcert.hpp"
#include "quasihilb/sturm.hpp"

using namespace quasihilb;
using testsupport::thrown_code;

namespace {

FactoredConstituent make_fc(int k, int d, int i, int q, const RatPoly& cofactor) {
  FactoredConstituent fc;
  fc.class_index = i;
  fc.period_bound = k;
  fc.pole_order = d;
  fc.reduced_degree = q;
  fc.scale = Rational(1) / (factorial(d - 1) * pow(Rational(k), d - 1));
  fc.trivial = trivial_factor(d - 1 - q, k, i);
  fc.cofactor = cofactor;
  fc.constituent = fc.trivial * cofactor * fc.scale;
  return fc;
}

}  // namespace

TEST_CASE("exact roots of linear and repeated factors") {
  auto roots = find_roots(RatPoly({Rational(1), Rational(2)}), 1e-9);  // 2x + 1
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].re == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(roots[0].im == 0.0);
  CHECK(roots[0].multiplicity == 1);

  RatPoly dbl = poly_from_roots({Rational(-1), Rational(-1)});
  roots = find_roots(dbl, 1e-9);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].re == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(roots[0].multiplicity == 2);

  RatPoly six = poly_from_roots({Rational(-1), Rational(2)});
  six = six * six * six;
  roots = find_roots(six, 1e-9);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 3);
  CHECK(roots[1].multiplicity == 3);
  CHECK(roots[0].re == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(roots[1].re == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("conjugate pairs and a root at the origin") {
  RatPoly p({Rational(1), Rational(0), Rational(1)});  // x^2 + 1
  auto roots = find_roots(p, 1e-9);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].im == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(roots[1].im == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(roots[0].re) < 1e-12);

  RatPoly q = RatPoly({Rational(0), Rational(1)}) * p;  // x(x^2+1)
  roots = find_roots(q, 1e-9);
  REQUIRE(roots.size() == 3);
  bool has_origin = false;
  for (const auto& r : roots) has_origin |= (r.re == 0.0 && r.im == 0.0);
  CHECK(has_origin);
}

TEST_CASE("root finder matches constructed factorizations") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 15; ++t) {
    std::vector<std::complex<double>> expected;
    RatPoly p({Rational(1 + testsupport::pick(rng, 3))});
    int blocks = 2 + static_cast<int>(testsupport::pick(rng, 3));
    for (int b = 0; b < blocks && (!p.degree() || *p.degree() <= 8); ++b) {
      if (testsupport::pick(rng, 2) == 0) {
        Rational r(testsupport::pick(rng, 17) - 8, 1 + testsupport::pick(rng, 3));
        // keep roots distinct: separate by block index
        r += Rational(100 * b);
        p *= RatPoly({-r, Rational(1)});
        expected.emplace_back(r.to_double(), 0.0);
      } else {
        Rational u(testsupport::pick(rng, 9) - 4, 1 + testsupport::pick(rng, 2));
        Rational v(1 + testsupport::pick(rng, 6), 1 + testsupport::pick(rng, 2));
        u += Rational(10 * b);
        // (x - u)^2 + v^2
        p *= RatPoly({u * u + v * v, Rational(-2) * u, Rational(1)});
        expected.emplace_back(u.to_double(), v.to_double());
        expected.emplace_back(u.to_double(), -v.to_double());
      }
    }
    auto roots = find_roots(p, 1e-9);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == static_cast<int>(expected.size()));
    for (const auto& e : expected) {
      double best = 1e18;
      for (const auto& r : roots)
        best = std::min(best, std::hypot(r.re - e.real(), r.im - e.imag()));
      CHECK(best <= 1e-9);
    }
    for (const auto& r : roots) CHECK(r.residual <= 1e-9);
  }
}

TEST_CASE("root finder edge cases and divergence") {
  CHECK(thrown_code([] { find_roots(RatPoly{}, 1e-9); }) == Errc::zero_divisor);
  CHECK(find_roots(RatPoly({Rational(3)}), 1e-9).empty());

  std::vector<Rational> wilkinson;
  for (long j = 1; j <= 10; ++j) wilkinson.emplace_back(j);
  RootFindingOptions opts;
  opts.max_iterations = 1;
  CHECK(thrown_code([&] { find_roots(poly_from_roots(wilkinson), opts); }) ==
        Errc::root_finding_diverged);
  // with the default budget it converges
  auto roots = find_roots(poly_from_roots(wilkinson), 1e-9);
  CHECK(roots.size() == 10);
}

TEST_CASE("critical abscissa") {
  FactoredConstituent fc = make_fc(2, 3, 0, 1, RatPoly({Rational(1)}));
  CHECK(critical_abscissa(fc) == Rational(-2));
  fc = make_fc(2, 3, 1, 0, RatPoly({Rational(1)}));
  CHECK(critical_abscissa(fc) == Rational(-2));  // -((3-0)*2 - 2)/2
  fc = make_fc(1, 3, 0, 2, RatPoly({Rational(1)}));
  CHECK(critical_abscissa(fc) == Rational(-1, 2));
}

TEST_CASE("unit circle report for the off-circle control") {
  GenFun f(RatPoly({Rational(1), Rational(0), Rational(2)}), 2, 3);  // 1 + 2t^2
  NumeratorSplit split = split_numerator(f);
  UnitCircleReport rep = check_unit_circle(split, 0, 1e-9);
  CHECK(rep.stripped_power == 0);
  CHECK(rep.at_one_nonzero);
  CHECK(!rep.self_inversive);  // [1,0,2] reversed is [2,0,1]
  CHECK(rep.max_modulus_deviation ==
        doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(!rep.hypothesis_holds);
  CHECK(thrown_code([&] { check_unit_circle(split, 1, 1e-9); }) == Errc::empty_class);
}

TEST_CASE("unit circle report strips powers of t") {
  // t + t^3 = t(1 + t^2): roots of the stripped part are +-i
  RatPoly u({Rational(0), Rational(1), Rational(0), Rational(1)});
  GenFun f(u, 2, 3);
  NumeratorSplit split = split_numerator(f);
  UnitCircleReport rep = check_unit_circle(split, 1, 1e-9);
  CHECK(rep.stripped_power == 1);
  CHECK(rep.at_one_nonzero);
  CHECK(rep.self_inversive);
  CHECK(rep.max_modulus_deviation <= 1e-12);
  CHECK(rep.hypothesis_holds);
  REQUIRE(rep.roots.size() == 2);
}

TEST_CASE("unit circle report flags a root at one") {
  // 1 - t^2 vanishes at t = 1
  GenFun f(RatPoly({Rational(1), Rational(0), Rational(-1)}), 2, 3);
  UnitCircleReport rep = check_unit_circle(split_numerator(f), 0, 1e-9);
  CHECK(!rep.at_one_nonzero);
  CHECK(rep.max_modulus_deviation <= 1e-12);  // roots +-1 are on the circle
  CHECK(!rep.hypothesis_holds);
}

TEST_CASE("numeric line certificate on the palindromic example") {
  GenFun f(RatPoly({Rational(1), Rational(0), Rational(1)}), 2, 3);
  FactoredConstituent fc = factor_constituent(f, 0);
  RootCertificate cert = certify_critical_line_numeric(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::numeric_pass);
  CHECK(cert.method == CertMethod::aberth);
  CHECK(cert.abscissa == Rational(-2));
  CHECK(cert.max_real_deviation <= 1e-12);
  std::vector<long> expect{-2};
  CHECK(cert.trivial_roots_verified == expect);
}

TEST_CASE("exact line certificate on the palindromic example") {
  GenFun f(RatPoly({Rational(1), Rational(0), Rational(1)}), 2, 3);
  FactoredConstituent fc = factor_constituent(f, 0);
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::exact_certified);
  CHECK(cert.method == CertMethod::sturm);
  CHECK(cert.max_real_deviation == 0.0);
}

TEST_CASE("exact certificate with a nontrivial even part") {
  // cofactor 4n^2 + 4n + 2 recentred at -1/2 becomes 4y^2 + 1
  FactoredConstituent fc =
      make_fc(1, 3, 0, 2, RatPoly({Rational(2), Rational(4), Rational(4)}));
  CHECK(critical_abscissa(fc) == Rational(-1, 2));
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::exact_certified);

  // and the numeric path agrees
  RootCertificate num = certify_critical_line_numeric(fc, 1e-8);
  CHECK(num.line_status == LineStatus::numeric_pass);
}

TEST_CASE("exact certificate falls back when parity fails") {
  // cofactor (n+1)(n+2) recentred at -1 is y^2 + y: odd coefficient
  FactoredConstituent fc =
      make_fc(1, 3, 0, 1, RatPoly({Rational(2), Rational(3), Rational(1)}));
  CHECK(critical_abscissa(fc) == Rational(-1));
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::numeric_fail);
  CHECK(cert.method == CertMethod::aberth);
  CHECK(cert.note.find("not even") != std::string::npos);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->re == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(cert.max_real_deviation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact certificate falls back when roots sit off-line symmetrically") {
  // cofactor n(n+2) recentred at -1 is y^2 - 1: even but with real roots
  FactoredConstituent fc =
      make_fc(1, 3, 0, 1, RatPoly({Rational(0), Rational(2), Rational(1)}));
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::numeric_fail);
  CHECK(cert.note.find("Sturm count") != std::string::npos);
  CHECK(cert.max_real_deviation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact certificate handles a cofactor root at the critical point") {
  // cofactor (n+1)(n^2+2n+2): recentred at -1 gives y(y^2+1)
  RatPoly cof = RatPoly({Rational(1), Rational(1)}) *
                RatPoly({Rational(2), Rational(2), Rational(1)});
  FactoredConstituent fc = make_fc(1, 3, 0, 1, cof);
  CHECK(critical_abscissa(fc) == Rational(-1));
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::exact_certified);
}

TEST_CASE("exact certificate handles repeated roots on the line") {
  // cofactor (n^2+2n+2)^2: double conjugate pair at -1 +- i, abscissa -1
  RatPoly base({Rational(2), Rational(2), Rational(1)});
  FactoredConstituent fc = make_fc(1, 3, 0, 1, base * base);
  CHECK(critical_abscissa(fc) == Rational(-1));
  RootCertificate cert = certify_critical_line_exact(fc, 1e-9);
  CHECK(cert.line_status == LineStatus::exact_certified);
}

TEST_CASE("family generator emits the hypothesis-satisfying numerators") {
  GenFun f = generate_unit_circle_family(2, 3, 0, {{1, 2}}, Rational(1));
  CHECK(f.numerator() == RatPoly({Rational(1), Rational(0), Rational(1)}));

  GenFun g = generate_unit_circle_family(1, 3, 0, {{1, 3}}, Rational(1));
  CHECK(g.numerator() == RatPoly({Rational(1), Rational(1), Rational(1)}));

  GenFun h = generate_unit_circle_family(1, 3, 0, {{1, 4}}, Rational(2));
  CHECK(h.numerator() == RatPoly({Rational(2), Rational(0), Rational(2)}));

  GenFun e = generate_unit_circle_family(1, 3, 0, {{1, 6}}, Rational(1));
  CHECK(e.numerator() == RatPoly({Rational(1), Rational(-1), Rational(1)}));

  // 2/4 reduces to 1/2
  GenFun r = generate_unit_circle_family(2, 3, 1, {{2, 4}}, Rational(1));
  CHECK(r.numerator() == RatPoly({Rational(0), Rational(1), Rational(0), Rational(1)}));

  CHECK(thrown_code([] { generate_unit_circle_family(2, 3, 0, {{3, 3}}, Rational(1)); }) ==
        Errc::root_at_one_forbidden);
  CHECK(thrown_code([] { generate_unit_circle_family(2, 3, 0, {{1, 5}}, Rational(1)); }) ==
        Errc::irrational_coefficients);
  CHECK(thrown_code([] { generate_unit_circle_family(1, 2, 0, {{1, 2}, {1, 2}}, Rational(1)); }) ==
        Errc::invalid_genfun);
  CHECK(thrown_code([] { generate_unit_circle_family(2, 3, 0, {{1, 2}}, Rational(0)); }) ==
        Errc::zero_numerator);
  CHECK(thrown_code([] { generate_unit_circle_family(2, 3, 2, {}, Rational(1)); }) == Errc::usage);
}

TEST_CASE("generated families always certify") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 50; ++t) {
    int k = 1 + static_cast<int>(testsupport::pick(rng, 4));
    int d = 1 + static_cast<int>(testsupport::pick(rng, 6));
    int i = static_cast<int>(testsupport::pick(rng, k));
    int slots = (k * d - 1 - i) / k;
    std::vector<UnityStep> steps;
    const long orders[4] = {2, 3, 4, 6};
    while (static_cast<int>(steps.size()) < 4 && slots > 0) {
      long m = orders[testsupport::pick(rng, 4)];
      int cost = (m == 2) ? 1 : 2;
      if (cost > slots) break;
      long n = 1 + testsupport::pick(rng, m - 1);  // never reduces to order 1
      steps.push_back({n, m});
      slots -= cost;
    }
    Rational coeff(1 + testsupport::pick(rng, 3));
    GenFun f = generate_unit_circle_family(k, d, i, steps, coeff);
    TheoremSuiteResult suite = verify_theorem_suite(f, 1e-9);
    CHECK(!suite.asserted_failure);
    const ClassVerification& cv = suite.classes[static_cast<size_t>(i)];
    REQUIRE(!cv.empty);
    CHECK(cv.unit_circle->hypothesis_holds);
    REQUIRE(cv.certificate.has_value());
    bool ok = cv.certificate->line_status == LineStatus::exact_certified ||
              (cv.certificate->line_status == LineStatus::numeric_pass &&
               cv.certificate->max_real_deviation <= 1e-8);
    CHECK(ok);
  }
}

TEST_CASE("verification suite on the off-circle control") {
  GenFun f(RatPoly({Rational(1), Rational(0), Rational(2)}), 2, 3);
  TheoremSuiteResult suite = verify_theorem_suite(f, 1e-9);
  REQUIRE(suite.classes.size() == 2);

  const ClassVerification& c0 = suite.classes[0];
  CHECK(!c0.empty);
  CHECK(!c0.unit_circle->hypothesis_holds);
  CHECK(c0.certificate->line_status == LineStatus::not_applicable);
  CHECK(c0.certificate->method == CertMethod::none);
  std::vector<long> expect{-2};
  CHECK(c0.certificate->trivial_roots_verified == expect);

  CHECK(suite.classes[1].empty);
  CHECK(!suite.global.applicable);
  CHECK(suite.global.reason.find("class 1") != std::string::npos);
  CHECK(!suite.asserted_failure);
}

TEST_CASE("verification suite with shared product roots") {
  GenFun f(RatPoly({Rational(1), Rational(1)}), 2, 2);
  TheoremSuiteResult suite = verify_theorem_suite(f, 1e-9);
  CHECK(suite.global.applicable);
  std::vector<long> expect{-1, -2};
  CHECK(suite.global.roots_checked == expect);
  CHECK(suite.global.verified);
  for (const auto& cv : suite.classes) {
    CHECK(!cv.empty);
    CHECK(cv.unit_circle->hypothesis_holds);
    CHECK(cv.certificate->line_status == LineStatus::exact_certified);
  }
}

TEST_CASE("exact certification implies numeric agreement") {
  std::mt19937_64 rng(866);
  for (int t = 0; t < 25; ++t) {
    int k = 1 + static_cast<int>(testsupport::pick(rng, 3));
    int d = 2 + static_cast<int>(testsupport::pick(rng, 4));
    int i = static_cast<int>(testsupport::pick(rng, k));
    int slots = (k * d - 1 - i) / k;
    std::vector<UnityStep> steps;
    const long orders[4] = {2, 3, 4, 6};
    while (slots > 0 && static_cast<int>(steps.size()) < 3) {
      long m = orders[testsupport::pick(rng, 4)];
      int cost = (m == 2) ? 1 : 2;
      if (cost > slots) break;
      steps.push_back({1, m});
      slots -= cost;
    }
    GenFun f = generate_unit_circle_family(k, d, i, steps, Rational(1));
    FactoredConstituent fc = factor_constituent(f, i);
    RootCertificate exact = certify_critical_line_exact(fc, 1e-9);
    if (exact.line_status == LineStatus::exact_certified) {
      RootCertificate numeric = certify_critical_line_numeric(fc, 1e-8);
      CHECK(numeric.line_status == LineStatus::numeric_pass);
    }
  }
}
