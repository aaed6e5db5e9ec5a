#pragma once

#include <optional>
#include <vector>

#include "quasihilb/poly.hpp"

namespace quasihilb {

// Sturm chain of the square-free part of a nonzero polynomial: chain[0] is the
// square-free part, chain[1] its derivative, then negated euclidean remainders
// down to a nonzero constant. Sign variation differences count distinct real
// roots.
class SturmChain {
public:
  explicit SturmChain(const RatPoly& p);  // throws ZeroDivisor when p is zero

  const std::vector<RatPoly>& elements() const { return chain_; }
  const RatPoly& squarefree() const { return chain_.front(); }

private:
  std::vector<RatPoly> chain_;
};

// Distinct real roots on the whole line.
int count_real_roots(const SturmChain& chain);

// Distinct real roots in (lo, hi]; a disengaged bound means the interval is
// unbounded on that side. Endpoints that happen to be roots are divided out
// exactly, so the half-open semantics hold even then.
int count_real_roots(const SturmChain& chain, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

}  // namespace quasihilb
