#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasihilb/rootcert.hpp"

namespace quasihilb {

using Json = nlohmann::ordered_json;

enum class Command { expand, constituents, factor, certify, fuzz, generate };
enum class OutputFormat { json, csv, text };

// Numerator input, two syntaxes:
//   coefficient list  "1,0,2/3,-1"        (lowest degree first)
//   polynomial terms  "1 + 2t^3 - 1/2t^5" (whitespace-insensitive, '*' optional)
// A string containing 't' is parsed as terms, anything else as a list.
// Throws ParseError (with position) on malformed input, ZeroNumerator when
// every coefficient cancels to zero.
RatPoly parse_numerator(std::string_view text);

// Canonical round-trippable form: comma-separated exact coefficients.
std::string serialize_numerator(const RatPoly& u);

struct JobSpec {
  Command command = Command::expand;
  std::string numerator;  // raw input text
  int k = 1;
  int d = 1;
  int count = 0;  // series length for expand
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
  int trials = 100;
  // generate only:
  int class_index = 0;
  std::vector<UnityStep> steps;
  std::string coeff = "1";
};

// A finished job: a schema-versioned document plus the process exit code
// (0 ok, 1 asserted check failed, 2 usage, 3 numeric divergence).
struct Report {
  Json doc;
  int exit_code = 0;
};

Report run(const JobSpec& job);

// Renders doc as requested; csv is only defined for expand (UsageError else).
std::string render(const Report& report, OutputFormat format);

int exit_code_for(Errc code) noexcept;

OutputFormat parse_format(std::string_view name);                    // throws UsageError
std::vector<UnityStep> parse_steps(std::string_view text);           // "1/2,2/3"

struct FuzzBounds {
  int max_k = 6;
  int max_d = 6;
  long coeff_bound = 9;
};

// Deterministic random generating function within the bounds. Uses explicit
// modulo reduction, never std::uniform_int_distribution, so the stream is
// identical across standard libraries.
GenFun sample_genfun(std::mt19937_64& rng, const FuzzBounds& bounds);

struct FuzzFailure {
  int trial = 0;
  std::string numerator;  // serialized, ready to paste into -U
  int k = 0;
  int d = 0;
  std::string check;
  std::string detail;
};

struct FuzzOutcome {
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  std::vector<FuzzFailure> failures;
};

// Per trial: closed form vs interpolation, factorization exactness, forced
// integer roots, and shared product roots when every class is populated.
FuzzOutcome fuzz_campaign(std::uint64_t seed, int trials, const FuzzBounds& bounds = {});

}  // namespace quasihilb
