#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quasihilb/cli.hpp"
#include "quasihilb/log.hpp"

using namespace quasihilb;

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-series quasipolynomials of U(t)/(1-t^k)^d, exactly, with root certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  JobSpec job;
  std::string format = "json";
  std::string out_path;
  std::string steps_text;

  app.add_option("--format", format, "Output format: json, csv, or text")->capture_default_str();
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  auto add_genfun_options = [&](CLI::App* sub) {
    sub->add_option("-U,--numerator", job.numerator,
                    "Numerator U: coefficient list '1,0,2' or terms '1 + 2t^3 - 1/2t^5'")
        ->required();
    sub->add_option("-k", job.k, "Period bound k (>= 1)")->required();
    sub->add_option("-d", job.d, "Pole order d (>= 1)")->required();
  };

  auto* ex = app.add_subcommand("expand", "Exact power-series coefficients");
  add_genfun_options(ex);
  ex->add_option("-N,--count", job.count, "Number of coefficients")->required();

  auto* co = app.add_subcommand("constituents", "Closed-form constituents, one per residue class");
  add_genfun_options(co);

  auto* fa = app.add_subcommand("factor", "Constituents split as scale * forced factor * cofactor");
  add_genfun_options(fa);

  auto* ce = app.add_subcommand("certify", "Unit-circle reports and critical-line certificates");
  add_genfun_options(ce);
  ce->add_option("--tol", job.tolerance, "Numeric tolerance")->capture_default_str();

  auto* fu = app.add_subcommand("fuzz", "Randomized self-checks against the series oracle");
  fu->add_option("--seed", job.seed, "RNG seed")->capture_default_str();
  fu->add_option("--trials", job.trials, "Number of random cases")->capture_default_str();

  auto* ge = app.add_subcommand("generate", "Build a numerator whose class satisfies the hypothesis");
  ge->add_option("-k", job.k, "Period bound k (>= 1)")->required();
  ge->add_option("-d", job.d, "Pole order d (>= 1)")->required();
  ge->add_option("--class", job.class_index, "Residue class index")->capture_default_str();
  ge->add_option("--steps", steps_text,
                 "Comma list of root-of-unity orders as fractions, e.g. '1/2,1/3'");
  ge->add_option("-c,--coeff", job.coeff, "Leading coefficient")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (ex->parsed()) job.command = Command::expand;
  else if (co->parsed()) job.command = Command::constituents;
  else if (fa->parsed()) job.command = Command::factor;
  else if (ce->parsed()) job.command = Command::certify;
  else if (fu->parsed()) job.command = Command::fuzz;
  else job.command = Command::generate;

  try {
    job.format = parse_format(format);
    if (ge->parsed()) job.steps = parse_steps(steps_text);
    Report report = run(job);
    std::string text = render(report, job.format);
    if (out_path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream os(out_path);
      if (!os) {
        std::cerr << "quasihilb: cannot open '" << out_path << "' for writing\n";
        return 2;
      }
      os << text;
      if (!text.empty() && text.back() != '\n') os << "\n";
    }
    return report.exit_code;
  } catch (const Error& err) {
    std::cerr << "quasihilb: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "quasihilb: " << err.what() << "\n";
    return 2;
  }
}
