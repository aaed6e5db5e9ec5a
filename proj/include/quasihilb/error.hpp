#pragma once

#include <stdexcept>
#include <string>

namespace quasihilb {

enum class Errc {
  zero_divisor,
  not_enough_samples,
  exponent_out_of_range,
  empty_class,
  theorem_violation,
  root_finding_diverged,
  parse_error,
  zero_numerator,
  root_at_one_forbidden,
  irrational_coefficients,
  invalid_genfun,
  usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace quasihilb
