#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quasihilb/cli.hpp"
#include "quasihilb/genfun.hpp"

using namespace quasihilb;
using testsupport::thrown_code;

TEST_CASE("generating function validation") {
  RatPoly one({Rational(1)});
  CHECK_NOTHROW(GenFun(one, 1, 1));
  CHECK(thrown_code([&] { GenFun(RatPoly{}, 2, 2); }) == Errc::invalid_genfun);
  CHECK(thrown_code([&] { GenFun(one, 0, 2); }) == Errc::invalid_genfun);
  CHECK(thrown_code([&] { GenFun(one, 2, 0); }) == Errc::invalid_genfun);
  // deg U must stay below k*d
  RatPoly t4 = RatPoly::monomial(Rational(1), 4);
  CHECK(thrown_code([&] { GenFun(t4, 2, 2); }) == Errc::invalid_genfun);
  CHECK_NOTHROW(GenFun(RatPoly::monomial(Rational(1), 3), 2, 2));
}

TEST_CASE("series of the worked example") {
  GenFun f(RatPoly({Rational(1)}), 2, 2);
  auto s = series_prefix(f, 6);
  std::vector<Rational> expect{Rational(1), Rational(0), Rational(2),
                               Rational(0), Rational(3), Rational(0)};
  CHECK(s == expect);
}

TEST_CASE("series with k = 1") {
  GenFun f(RatPoly({Rational(1), Rational(1)}), 1, 2);
  auto s = series_prefix(f, 4);
  std::vector<Rational> expect{Rational(1), Rational(3), Rational(5), Rational(7)};
  CHECK(s == expect);
}

TEST_CASE("series length validation") {
  GenFun f(RatPoly({Rational(1)}), 2, 2);
  CHECK(thrown_code([&] { series_prefix(f, 0); }) == Errc::not_enough_samples);
  CHECK(series_prefix(f, 1).size() == 1);
}

TEST_CASE("series matches the independent binomial oracle") {
  std::mt19937_64 rng(9001);
  for (int t = 0; t < 60; ++t) {
    GenFun f = sample_genfun(rng, FuzzBounds{});
    int n = f.period_bound() * f.pole_order() + 7;
    CHECK(series_prefix(f, n) == testsupport::series_by_binomial(f, n));
  }
}

TEST_CASE("numerator split by residue class") {
  // U = 1 + 2t^3 - 1/2 t^5, k = 3
  RatPoly u({Rational(1), Rational(0), Rational(0), Rational(2), Rational(0), Rational(-1, 2)});
  GenFun f(u, 3, 2);
  NumeratorSplit split = split_numerator(f);
  REQUIRE(split.classes.size() == 3);

  CHECK(split.classes[0].part ==
        RatPoly({Rational(1), Rational(0), Rational(0), Rational(2)}));
  CHECK(split.classes[0].degree == 3);
  CHECK(split.classes[0].reduced_degree == 1);

  CHECK(split.classes[1].part.is_zero());
  CHECK(!split.classes[1].degree.has_value());
  CHECK(!split.classes[1].reduced_degree.has_value());

  CHECK(split.classes[2].part == RatPoly::monomial(Rational(-1, 2), 5));
  CHECK(split.classes[2].degree == 5);
  CHECK(split.classes[2].reduced_degree == 1);
}

TEST_CASE("split parts sum back to the numerator") {
  std::mt19937_64 rng(9002);
  for (int t = 0; t < 40; ++t) {
    GenFun f = sample_genfun(rng, FuzzBounds{});
    NumeratorSplit split = split_numerator(f);
    RatPoly sum;
    for (int i = 0; i < split.period_bound; ++i) {
      const auto& cls = split.classes[static_cast<size_t>(i)];
      sum += cls.part;
      if (cls.part.is_zero()) {
        CHECK(!cls.degree.has_value());
        continue;
      }
      // every exponent in the part is congruent to the class index
      const auto& c = cls.part.coefficients();
      for (size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) CHECK(static_cast<int>(j) % split.period_bound == i);
      CHECK(*cls.degree == *cls.part.degree());
      CHECK(*cls.reduced_degree == (*cls.degree - i) / split.period_bound);
    }
    CHECK(sum == f.numerator());
  }
}
