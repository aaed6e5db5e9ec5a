#include "quasihilb/genfun.hpp"

#include <string>

namespace quasihilb {

GenFun::GenFun(RatPoly numerator, int period_bound, int pole_order)
    : u_(std::move(numerator)), k_(period_bound), d_(pole_order) {
  if (k_ < 1) raise(Errc::invalid_genfun, "period bound k must be >= 1");
  if (d_ < 1) raise(Errc::invalid_genfun, "pole order d must be >= 1");
  if (u_.is_zero()) raise(Errc::invalid_genfun, "numerator must be nonzero");
  if (*u_.degree() > k_ * d_ - 1)
    raise(Errc::invalid_genfun, "numerator degree " + std::to_string(*u_.degree()) +
                                    " exceeds k*d-1 = " + std::to_string(k_ * d_ - 1));
}

NumeratorSplit split_numerator(const GenFun& f) {
  int k = f.period_bound();
  const auto& c = f.numerator().coefficients();
  std::vector<std::vector<Rational>> parts(static_cast<size_t>(k));
  for (auto& p : parts) p.assign(c.size(), Rational(0));
  for (size_t j = 0; j < c.size(); ++j)
    parts[j % static_cast<size_t>(k)][j] = c[j];

  NumeratorSplit out;
  out.period_bound = k;
  out.classes.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    NumeratorClass cls;
    cls.part = RatPoly(std::move(parts[static_cast<size_t>(i)]));
    if (!cls.part.is_zero()) {
      int e = *cls.part.degree();
      cls.degree = e;
      cls.reduced_degree = (e - i) / k;  // e ≡ i (mod k) by construction
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::vector<Rational> series_prefix(const GenFun& f, int count) {
  if (count < 1) raise(Errc::not_enough_samples, "series prefix length must be >= 1");
  int k = f.period_bound();
  int d = f.pole_order();
  // (1 - t^k)^d * H(t) = U(t) gives the recurrence
  //   H(n) = U_n - sum_{m=1..d} C(d,m) (-1)^m H(n - m*k).
  std::vector<Rational> wt(static_cast<size_t>(d) + 1);
  for (int m = 1; m <= d; ++m) {
    Rational b = binomial(d, m);
    wt[static_cast<size_t>(m)] = (m % 2 == 0) ? b : -b;
  }
  std::vector<Rational> h(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n) {
    Rational acc = f.numerator().coeff(n);
    for (int m = 1; m <= d && m * k <= n; ++m)
      acc -= wt[static_cast<size_t>(m)] * h[static_cast<size_t>(n - m * k)];
    h[static_cast<size_t>(n)] = acc;
  }
  return h;
}

}  // namespace quasihilb
