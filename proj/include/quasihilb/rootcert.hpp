#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasihilb/quasipoly.hpp"
#include "quasihilb/roots.hpp"

namespace quasihilb {

// Where the nontrivial constituent roots are claimed to lie when the class
// numerator has all its roots on the unit circle: the vertical line
// Re(x) = -((d - q) k - 2 i) / 2.
Rational critical_abscissa(const FactoredConstituent& fc);

enum class LineStatus {
  exact_certified,  // proven by exact symmetric-roots test, no floating point
  numeric_pass,     // every numeric cofactor root within tolerance of the line
  numeric_fail,     // some numeric root off the line (witness recorded)
  not_applicable,   // unit-circle hypothesis fails; nothing is claimed
};

enum class CertMethod { sturm, aberth, none };

const char* to_string(LineStatus s);
const char* to_string(CertMethod m);

struct RootCertificate {
  int class_index = 0;
  int reduced_degree = 0;  // q of the class
  Rational abscissa;       // critical line Re(x) = abscissa
  std::vector<long> trivial_roots_verified;  // checked exactly on the constituent
  LineStatus line_status = LineStatus::not_applicable;
  CertMethod method = CertMethod::none;
  double tolerance = 0.0;
  double max_real_deviation = 0.0;          // meaningful for numeric statuses
  std::optional<ComplexRoot> witness;       // worst offender on numeric_fail
  std::string note;                         // reason for not_applicable / fallback detail
};

// Exact and numeric evidence that the class numerator (t-powers stripped) has
// all roots on the unit circle and does not vanish at 1.
struct UnitCircleReport {
  int class_index = 0;
  int stripped_power = 0;        // exponent of t divided out before testing
  bool at_one_nonzero = false;   // exact
  bool self_inversive = false;   // exact necessary condition: reversed == ±self
  std::vector<ComplexRoot> roots;
  double max_modulus_deviation = 0.0;
  double tolerance = 0.0;
  bool hypothesis_holds = false;
};

// Throws EmptyClass for a class with no numerator terms.
UnitCircleReport check_unit_circle(const NumeratorSplit& split, int class_index, double tolerance);

// Numeric check: roots of the cofactor via find_roots, real parts compared to
// the critical abscissa. Trivial roots are always verified exactly first.
RootCertificate certify_critical_line_numeric(const FactoredConstituent& fc, double tolerance);

// Exact check: recentre the cofactor at the abscissa, demand an even
// polynomial (up to the y-power at the centre) whose compressed form has all
// roots real and negative, established by a Sturm count. No floating point on
// the success path; on failure of an exact precondition, falls back to the
// numeric check and records which condition failed (failure of the exact test
// is not a refutation).
RootCertificate certify_critical_line_exact(const FactoredConstituent& fc, double tolerance);

// One multiplicative step of a numerator built to satisfy the unit-circle
// hypothesis: the root of unity e^(2 pi i num/den).
struct UnityStep {
  long num = 0;
  long den = 1;
};

// c * t^class_index * prod of steps, each step contributing (t^k + 1) for
// order 2 or t^{2k} - 2cos(2 pi num/den) t^k + 1 for orders 3, 4, 6.
// Order 1 after reduction throws RootAtOneForbidden; any other order has an
// irrational 2cos and throws IrrationalCoefficients. Exceeding the numerator
// degree budget k*d-1 throws InvalidGenFun.
GenFun generate_unit_circle_family(int k, int d, int class_index,
                                   const std::vector<UnityStep>& steps, const Rational& coeff);

struct ClassVerification {
  int class_index = 0;
  bool empty = false;
  std::optional<UnitCircleReport> unit_circle;
  std::optional<RootCertificate> certificate;
};

struct GlobalRootCheck {
  bool applicable = false;  // every residue class of the numerator is nonzero
  std::string reason;       // why not, when inapplicable
  std::vector<long> roots_checked;  // -1 .. -(d*k - deg U - 1)
  bool verified = false;    // exact zeros of the constituent product
};

struct TheoremSuiteResult {
  std::vector<ClassVerification> classes;
  GlobalRootCheck global;
  // True when a class satisfying the unit-circle hypothesis still failed the
  // numeric line check: the one outcome that contradicts a claim.
  bool asserted_failure = false;
};

// Full verification pass over one generating function: per-class unit-circle
// reports, line certificates (exact first), and the shared integer roots of
// the constituent product when every class is populated.
TheoremSuiteResult verify_theorem_suite(const GenFun& f, double tolerance);

}  // namespace quasihilb
