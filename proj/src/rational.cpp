#include "quasihilb/rational.hpp"

#include <cctype>
#include <ostream>

namespace quasihilb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_divisor: return "zero divisor";
    case Errc::not_enough_samples: return "not enough samples";
    case Errc::exponent_out_of_range: return "exponent out of range";
    case Errc::empty_class: return "empty residue class";
    case Errc::theorem_violation: return "theorem violation";
    case Errc::root_finding_diverged: return "root finding diverged";
    case Errc::parse_error: return "parse error";
    case Errc::zero_numerator: return "zero numerator";
    case Errc::root_at_one_forbidden: return "root at one forbidden";
    case Errc::irrational_coefficients: return "irrational coefficients";
    case Errc::invalid_genfun: return "invalid generating function";
    case Errc::usage: return "usage error";
  }
  return "unknown error";
}

Rational::Rational(long num, long den) {
  if (den == 0) raise(Errc::zero_divisor, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) raise(Errc::zero_divisor, "rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);  // operator/ canonicalizes
}

Rational Rational::from_string(std::string_view text) {
  auto bad = [&](const char* why) {
    raise(Errc::parse_error, std::string(why) + " in rational '" + std::string(text) + "'");
  };
  if (text.empty()) bad("empty string");
  size_t pos = 0;
  auto scan_int = [&](const char* what) {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;  // mpz_class rejects a leading '+', so drop the sign from the digits
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad(what);
    return (neg ? "-" : "") + std::string(text.substr(start, pos - start));
  };
  std::string num = scan_int("missing numerator digits");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_int("missing denominator digits");
  }
  if (pos != text.size()) bad("trailing characters");
  mpz_class n(num), d(den);
  if (sgn(d) == 0) raise(Errc::zero_divisor, "rational with zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(Errc::zero_divisor, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) raise(Errc::exponent_out_of_range, "pow with negative exponent");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational factorial(int n) {
  if (n < 0) raise(Errc::exponent_out_of_range, "factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, mpz_class(1));
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) raise(Errc::exponent_out_of_range, "binomial out of range");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b, mpz_class(1));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace quasihilb
