#include "quasihilb/sturm.hpp"

#include <stdexcept>

namespace quasihilb {

namespace {

std::vector<RatPoly> build_chain(const RatPoly& sf) {
  std::vector<RatPoly> chain{sf};
  if (sf.is_constant()) return chain;
  chain.push_back(derivative(sf));
  while (!chain.back().is_constant()) {
    RatPoly r = divrem(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;  // cannot happen for a square-free input, kept defensive
    chain.push_back(-r);
  }
  return chain;
}

// Sign of element at x, or at the infinite end when x is disengaged.
int sign_at(const RatPoly& p, const std::optional<Rational>& x, bool positive_end) {
  if (p.is_zero()) return 0;
  if (x) return p(*x).sign();
  int s = p.leading().sign();
  if (!positive_end && (*p.degree() % 2 != 0)) s = -s;
  return s;
}

int variations(const std::vector<RatPoly>& chain, const std::optional<Rational>& x,
               bool positive_end) {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x, positive_end);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int count_on(const RatPoly& sf, const std::optional<Rational>& lo,
             const std::optional<Rational>& hi) {
  if (sf.is_constant()) return 0;
  auto chain = build_chain(sf);
  return variations(chain, lo, false) - variations(chain, hi, true);
}

}  // namespace

SturmChain::SturmChain(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::zero_divisor, "Sturm chain of the zero polynomial");
  chain_ = build_chain(squarefree_part(p));
}

int count_real_roots(const SturmChain& chain) {
  const RatPoly& sf = chain.squarefree();
  if (sf.is_constant()) return 0;
  return variations(chain.elements(), std::nullopt, false) -
         variations(chain.elements(), std::nullopt, true);
}

int count_real_roots(const SturmChain& chain, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count_real_roots: lo must be < hi");
  RatPoly sf = chain.squarefree();
  if (sf.is_constant()) return 0;

  // (lo, hi] semantics: an endpoint that is itself a root is divided out
  // exactly; hi being a root contributes one extra since hi is included.
  int bonus = 0;
  bool deflated = false;
  if (lo && sf(*lo).is_zero()) {
    sf = divrem(sf, RatPoly({-*lo, Rational(1)})).quotient;
    deflated = true;
  }
  if (hi && sf(*hi).is_zero()) {
    sf = divrem(sf, RatPoly({-*hi, Rational(1)})).quotient;
    bonus = 1;
    deflated = true;
  }
  if (!deflated) return count_on(sf, lo, hi);
  return count_on(sf, lo, hi) + bonus;
}

}  // namespace quasihilb
