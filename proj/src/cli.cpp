#include "quasihilb/cli.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "quasihilb/log.hpp"

namespace quasihilb {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct TermScanner {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    raise(Errc::parse_error,
          why + " at position " + std::to_string(pos) + " in numerator '" + std::string(s) + "'");
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits(const char* what) {
    size_t start = pos;
    while (at_digit()) ++pos;
    if (pos == start) fail(what);
    return std::string(s.substr(start, pos - start));
  }
};

RatPoly parse_terms(std::string_view text) {
  TermScanner sc{text};
  std::vector<Rational> coeffs;
  auto add = [&](int e, const Rational& c) {
    if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1);
    coeffs[static_cast<size_t>(e)] += c;
  };

  sc.skip_ws();
  int sign = 1;
  if (sc.peek() == '+' || sc.peek() == '-') {
    if (sc.peek() == '-') sign = -1;
    ++sc.pos;
  }
  while (true) {
    sc.skip_ws();
    Rational mag(1);
    bool have_coeff = false;
    if (sc.at_digit()) {
      std::string num = sc.digits("expected digits");
      sc.skip_ws();
      std::string den = "1";
      if (sc.peek() == '/') {
        ++sc.pos;
        sc.skip_ws();
        den = sc.digits("expected denominator digits after '/'");
      }
      mpz_class n(num), d(den);
      if (sgn(d) == 0) sc.fail("zero denominator");
      mag = Rational(n, d);
      have_coeff = true;
    }
    sc.skip_ws();
    bool star = false;
    if (sc.peek() == '*') {
      if (!have_coeff) sc.fail("'*' without a coefficient");
      star = true;
      ++sc.pos;
      sc.skip_ws();
    }
    int exponent = 0;
    if (sc.peek() == 't') {
      ++sc.pos;
      exponent = 1;
      sc.skip_ws();
      if (sc.peek() == '^') {
        ++sc.pos;
        sc.skip_ws();
        std::string e = sc.digits("expected a nonnegative integer exponent after '^'");
        if (e.size() > 6) sc.fail("exponent too large");
        exponent = std::stoi(e);
      }
    } else {
      if (star) sc.fail("expected 't' after '*'");
      if (!have_coeff) sc.fail("expected a coefficient or 't'");
    }
    add(exponent, sign == 1 ? mag : -mag);

    sc.skip_ws();
    if (sc.pos == sc.s.size()) break;
    if (sc.peek() == '+') sign = 1;
    else if (sc.peek() == '-') sign = -1;
    else sc.fail("expected '+' or '-' between terms");
    ++sc.pos;
  }
  return RatPoly(std::move(coeffs));
}

RatPoly parse_list(std::string_view text) {
  std::vector<Rational> coeffs;
  size_t start = 0;
  size_t index = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::erase_if(piece, [](unsigned char c) { return std::isspace(c) != 0; });
    if (piece.empty())
      raise(Errc::parse_error, "empty coefficient at index " + std::to_string(index) +
                                   " in numerator '" + std::string(text) + "'");
    try {
      coeffs.push_back(Rational::from_string(piece));
    } catch (const Error& e) {
      if (e.code() != Errc::parse_error) throw;
      raise(Errc::parse_error, "bad coefficient '" + piece + "' at index " +
                                   std::to_string(index) + " in numerator '" + std::string(text) +
                                   "'");
    }
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RatPoly(std::move(coeffs));
}

Json coeff_array(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

Json poly_json(const RatPoly& p, const std::string& var) {
  Json j;
  if (p.is_zero()) j["degree"] = nullptr;
  else j["degree"] = *p.degree();
  j["coefficients"] = coeff_array(p);
  j["pretty"] = to_pretty_string(p, var);
  return j;
}

Json root_json(const ComplexRoot& r) {
  Json j;
  j["re"] = r.re;
  j["im"] = r.im;
  j["multiplicity"] = r.multiplicity;
  j["residual"] = r.residual;
  return j;
}

Json circle_json(const UnitCircleReport& rep) {
  Json j;
  j["stripped_power"] = rep.stripped_power;
  j["at_one_nonzero"] = rep.at_one_nonzero;
  j["self_inversive"] = rep.self_inversive;
  Json roots = Json::array();
  for (const auto& r : rep.roots) roots.push_back(root_json(r));
  j["roots"] = roots;
  j["max_modulus_deviation"] = rep.max_modulus_deviation;
  j["tolerance"] = rep.tolerance;
  j["hypothesis_holds"] = rep.hypothesis_holds;
  return j;
}

Json cert_json(const RootCertificate& cert) {
  Json j;
  j["reduced_degree"] = cert.reduced_degree;
  j["abscissa"] = cert.abscissa.str();
  Json tr = Json::array();
  for (long r : cert.trivial_roots_verified) tr.push_back(r);
  j["trivial_roots_verified"] = tr;
  j["line_status"] = to_string(cert.line_status);
  j["method"] = to_string(cert.method);
  j["tolerance"] = cert.tolerance;
  j["max_real_deviation"] = cert.max_real_deviation;
  if (cert.witness) j["witness"] = root_json(*cert.witness);
  else j["witness"] = nullptr;
  j["note"] = cert.note;
  return j;
}

Json envelope(const char* command) {
  Json j;
  j["schema"] = "quasihilb/1";
  j["command"] = command;
  return j;
}

GenFun genfun_from(const JobSpec& job, const RatPoly& u) { return GenFun(u, job.k, job.d); }

Report run_expand(const JobSpec& job) {
  if (job.count < 1) raise(Errc::usage, "series length must be >= 1 (set -N)");
  RatPoly u = parse_numerator(job.numerator);
  GenFun f = genfun_from(job, u);
  log_line(LogLevel::info, "expanding " + std::to_string(job.count) + " series coefficients");
  auto series = series_prefix(f, job.count);

  Json doc = envelope("expand");
  doc["job"] = Json{};
  doc["job"]["numerator"] = job.numerator;
  doc["job"]["coefficients"] = coeff_array(u);
  doc["job"]["k"] = job.k;
  doc["job"]["d"] = job.d;
  doc["job"]["count"] = job.count;
  Json values = Json::array();
  for (const auto& v : series) values.push_back(v.str());
  doc["result"] = Json{};
  doc["result"]["values"] = values;
  doc["verdict"] = "ok";
  return {std::move(doc), 0};
}

Report run_constituents(const JobSpec& job) {
  RatPoly u = parse_numerator(job.numerator);
  GenFun f = genfun_from(job, u);
  QuasiPoly qp = constituents_closed_form(f);

  Json doc = envelope("constituents");
  doc["job"] = Json{};
  doc["job"]["numerator"] = job.numerator;
  doc["job"]["coefficients"] = coeff_array(u);
  doc["job"]["k"] = job.k;
  doc["job"]["d"] = job.d;
  Json arr = Json::array();
  for (int i = 0; i < job.k; ++i) {
    Json c;
    c["class"] = i;
    Json p = poly_json(qp.constituents[static_cast<size_t>(i)], "n");
    c["degree"] = p["degree"];
    c["coefficients"] = p["coefficients"];
    c["pretty"] = p["pretty"];
    arr.push_back(std::move(c));
  }
  doc["result"] = Json{};
  doc["result"]["constituents"] = arr;
  doc["verdict"] = "ok";
  return {std::move(doc), 0};
}

Report run_factor(const JobSpec& job) {
  RatPoly u = parse_numerator(job.numerator);
  GenFun f = genfun_from(job, u);
  NumeratorSplit split = split_numerator(f);

  Json doc = envelope("factor");
  doc["job"] = Json{};
  doc["job"]["numerator"] = job.numerator;
  doc["job"]["coefficients"] = coeff_array(u);
  doc["job"]["k"] = job.k;
  doc["job"]["d"] = job.d;
  Json arr = Json::array();
  for (int i = 0; i < job.k; ++i) {
    Json c;
    c["class"] = i;
    if (split.classes[static_cast<size_t>(i)].part.is_zero()) {
      c["empty"] = true;
      arr.push_back(std::move(c));
      continue;
    }
    c["empty"] = false;
    FactoredConstituent fc = factor_constituent(f, i);
    c["reduced_degree"] = fc.reduced_degree;
    c["scale"] = fc.scale.str();
    c["trivial"] = poly_json(fc.trivial, "n");
    c["cofactor"] = poly_json(fc.cofactor, "n");
    c["constituent"] = poly_json(fc.constituent, "n");
    Json roots = Json::array();
    for (long r : forced_integer_roots(fc)) roots.push_back(r);
    c["forced_roots"] = roots;
    arr.push_back(std::move(c));
  }
  doc["result"] = Json{};
  doc["result"]["classes"] = arr;
  doc["verdict"] = "ok";
  return {std::move(doc), 0};
}

Report run_certify(const JobSpec& job) {
  RatPoly u = parse_numerator(job.numerator);
  GenFun f = genfun_from(job, u);
  log_line(LogLevel::info, "certifying " + std::to_string(job.k) + " residue classes");
  TheoremSuiteResult suite = verify_theorem_suite(f, job.tolerance);

  Json doc = envelope("certify");
  doc["job"] = Json{};
  doc["job"]["numerator"] = job.numerator;
  doc["job"]["coefficients"] = coeff_array(u);
  doc["job"]["k"] = job.k;
  doc["job"]["d"] = job.d;
  doc["job"]["tolerance"] = job.tolerance;
  Json arr = Json::array();
  for (const auto& cv : suite.classes) {
    Json c;
    c["class"] = cv.class_index;
    c["empty"] = cv.empty;
    if (!cv.empty) {
      c["unit_circle"] = circle_json(*cv.unit_circle);
      c["certificate"] = cert_json(*cv.certificate);
    }
    arr.push_back(std::move(c));
  }
  Json global;
  global["applicable"] = suite.global.applicable;
  global["reason"] = suite.global.reason;
  Json rc = Json::array();
  for (long r : suite.global.roots_checked) rc.push_back(r);
  global["roots_checked"] = rc;
  global["verified"] = suite.global.verified;
  doc["result"] = Json{};
  doc["result"]["classes"] = arr;
  doc["result"]["global"] = global;
  doc["verdict"] = suite.asserted_failure ? "fail" : "ok";
  return {std::move(doc), suite.asserted_failure ? 1 : 0};
}

Report run_fuzz(const JobSpec& job) {
  FuzzOutcome outcome = fuzz_campaign(job.seed, job.trials);

  Json doc = envelope("fuzz");
  doc["job"] = Json{};
  doc["job"]["seed"] = outcome.seed;
  doc["job"]["trials"] = outcome.trials;
  Json fails = Json::array();
  for (const auto& fl : outcome.failures) {
    Json f;
    f["trial"] = fl.trial;
    f["numerator"] = fl.numerator;
    f["k"] = fl.k;
    f["d"] = fl.d;
    f["check"] = fl.check;
    f["detail"] = fl.detail;
    fails.push_back(std::move(f));
  }
  doc["result"] = Json{};
  doc["result"]["passed"] = outcome.passed;
  doc["result"]["failures"] = fails;
  bool bad = !outcome.failures.empty();
  doc["verdict"] = bad ? "fail" : "ok";
  return {std::move(doc), bad ? 1 : 0};
}

Report run_generate(const JobSpec& job) {
  Rational coeff = Rational::from_string(job.coeff);
  GenFun f = generate_unit_circle_family(job.k, job.d, job.class_index, job.steps, coeff);

  Json doc = envelope("generate");
  doc["job"] = Json{};
  doc["job"]["k"] = job.k;
  doc["job"]["d"] = job.d;
  doc["job"]["class"] = job.class_index;
  Json steps = Json::array();
  for (const auto& s : job.steps) steps.push_back(std::to_string(s.num) + "/" + std::to_string(s.den));
  doc["job"]["steps"] = steps;
  doc["job"]["coeff"] = coeff.str();
  doc["result"] = Json{};
  doc["result"]["numerator"] = serialize_numerator(f.numerator());
  doc["result"]["coefficients"] = coeff_array(f.numerator());
  doc["result"]["degree"] = *f.numerator().degree();
  doc["verdict"] = "ok";
  return {std::move(doc), 0};
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  std::string cmd = doc.at("command").get<std::string>();
  if (cmd == "expand") {
    const auto& values = doc.at("result").at("values");
    os << "U = " << doc.at("job").at("numerator").get<std::string>() << ", k = "
       << doc.at("job").at("k").get<int>() << ", d = " << doc.at("job").at("d").get<int>() << "\n";
    int n = 0;
    for (const auto& v : values) os << "H(" << n++ << ") = " << v.get<std::string>() << "\n";
  } else if (cmd == "constituents") {
    for (const auto& c : doc.at("result").at("constituents")) {
      os << "class " << c.at("class").get<int>() << ": H(n) = " << c.at("pretty").get<std::string>();
      if (c.at("degree").is_null()) os << "   [zero]";
      else os << "   [degree " << c.at("degree").get<int>() << "]";
      os << "\n";
    }
  } else if (cmd == "factor") {
    for (const auto& c : doc.at("result").at("classes")) {
      os << "class " << c.at("class").get<int>() << ": ";
      if (c.at("empty").get<bool>()) { os << "empty\n"; continue; }
      os << "scale " << c.at("scale").get<std::string>() << ", forced ("
         << c.at("trivial").at("pretty").get<std::string>() << "), cofactor ("
         << c.at("cofactor").at("pretty").get<std::string>() << ")";
      os << ", forced roots";
      const auto& roots = c.at("forced_roots");
      if (roots.empty()) os << " none";
      for (const auto& r : roots) os << " " << r.get<long>();
      os << "\n";
    }
  } else if (cmd == "certify") {
    for (const auto& c : doc.at("result").at("classes")) {
      os << "class " << c.at("class").get<int>() << ": ";
      if (c.at("empty").get<bool>()) { os << "empty\n"; continue; }
      const auto& uc = c.at("unit_circle");
      os << "unit circle "
         << (uc.at("hypothesis_holds").get<bool>() ? "holds" : "fails")
         << " (max modulus deviation " << fmt_double(uc.at("max_modulus_deviation").get<double>())
         << ")\n";
      const auto& cert = c.at("certificate");
      os << "         line Re(n) = " << cert.at("abscissa").get<std::string>() << ": "
         << cert.at("line_status").get<std::string>();
      if (cert.at("line_status").get<std::string>() != "exact-certified" &&
          !cert.at("note").get<std::string>().empty())
        os << " (" << cert.at("note").get<std::string>() << ")";
      os << "\n";
    }
    const auto& global = doc.at("result").at("global");
    if (global.at("applicable").get<bool>()) {
      os << "shared roots";
      for (const auto& r : global.at("roots_checked")) os << " " << r.get<long>();
      os << (global.at("verified").get<bool>() ? ": verified" : ": FAILED") << "\n";
    } else {
      os << "shared roots: not applicable (" << global.at("reason").get<std::string>() << ")\n";
    }
    os << "verdict: " << doc.at("verdict").get<std::string>() << "\n";
  } else if (cmd == "fuzz") {
    os << "seed " << doc.at("job").at("seed").get<std::uint64_t>() << ": "
       << doc.at("result").at("passed").get<int>() << "/" << doc.at("job").at("trials").get<int>()
       << " trials passed\n";
    for (const auto& f : doc.at("result").at("failures"))
      os << "trial " << f.at("trial").get<int>() << ": -U '" << f.at("numerator").get<std::string>()
         << "' -k " << f.at("k").get<int>() << " -d " << f.at("d").get<int>() << ": "
         << f.at("check").get<std::string>() << ": " << f.at("detail").get<std::string>() << "\n";
  } else if (cmd == "generate") {
    os << "U = " << doc.at("result").at("numerator").get<std::string>() << "  (k = "
       << doc.at("job").at("k").get<int>() << ", d = " << doc.at("job").at("d").get<int>()
       << ", class " << doc.at("job").at("class").get<int>() << ", degree "
       << doc.at("result").at("degree").get<int>() << ")\n";
  }
  return os.str();
}

}  // namespace

RatPoly parse_numerator(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    raise(Errc::parse_error, "numerator is empty");
  RatPoly u = (text.find('t') != std::string_view::npos) ? parse_terms(text) : parse_list(text);
  if (u.is_zero()) raise(Errc::zero_numerator, "numerator '" + std::string(text) + "' is zero");
  return u;
}

std::string serialize_numerator(const RatPoly& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (size_t j = 0; j < u.coefficients().size(); ++j) {
    if (j) out += ",";
    out += u.coefficients()[j].str();
  }
  return out;
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::theorem_violation: return 1;
    case Errc::root_finding_diverged: return 3;
    default: return 2;
  }
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  raise(Errc::usage, "unknown format '" + std::string(name) + "' (expected json, csv, or text)");
}

std::vector<UnityStep> parse_steps(std::string_view text) {
  std::vector<UnityStep> steps;
  if (text.empty()) return steps;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::erase_if(piece, [](unsigned char c) { return std::isspace(c) != 0; });
    if (piece.empty()) raise(Errc::parse_error, "empty step in '" + std::string(text) + "'");
    Rational r = Rational::from_string(piece);
    if (!r.numerator().fits_slong_p() || !r.denominator().fits_slong_p())
      raise(Errc::usage, "step '" + piece + "' out of range");
    steps.push_back({r.numerator().get_si(), r.denominator().get_si()});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return steps;
}

Report run(const JobSpec& job) {
  if (job.format == OutputFormat::csv && job.command != Command::expand)
    raise(Errc::usage, "csv output is only defined for expand");
  switch (job.command) {
    case Command::expand: return run_expand(job);
    case Command::constituents: return run_constituents(job);
    case Command::factor: return run_factor(job);
    case Command::certify: return run_certify(job);
    case Command::fuzz: return run_fuzz(job);
    case Command::generate: return run_generate(job);
  }
  raise(Errc::usage, "unknown command");
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.doc.dump(2);
  if (format == OutputFormat::csv) {
    if (report.doc.at("command").get<std::string>() != "expand")
      raise(Errc::usage, "csv output is only defined for expand");
    std::string out = "n,coefficient\n";
    int n = 0;
    for (const auto& v : report.doc.at("result").at("values"))
      out += std::to_string(n++) + "," + v.get<std::string>() + "\n";
    return out;
  }
  return render_text(report.doc);
}

GenFun sample_genfun(std::mt19937_64& rng, const FuzzBounds& bounds) {
  auto pick = [&](long n) { return static_cast<long>(rng() % static_cast<std::uint64_t>(n)); };
  int k = 1 + static_cast<int>(pick(bounds.max_k));
  int d = 1 + static_cast<int>(pick(bounds.max_d));
  int budget = k * d - 1;  // highest legal exponent
  int nterms = 1 + static_cast<int>(pick(std::min(budget + 1, 6)));
  std::vector<Rational> c(static_cast<size_t>(budget) + 1);
  for (int t = 0; t < nterms; ++t) {
    int e = static_cast<int>(pick(budget + 1));
    long mag = 1 + pick(bounds.coeff_bound);
    long den = (pick(4) == 0) ? 1 + pick(4) : 1;
    Rational r(pick(2) != 0 ? -mag : mag, den);
    c[static_cast<size_t>(e)] += r;
  }
  RatPoly u(std::move(c));
  if (u.is_zero()) u = RatPoly::constant(Rational(1 + pick(bounds.coeff_bound)));
  return GenFun(std::move(u), k, d);
}

FuzzOutcome fuzz_campaign(std::uint64_t seed, int trials, const FuzzBounds& bounds) {
  if (trials < 1) raise(Errc::usage, "trial count must be >= 1");
  FuzzOutcome out;
  out.seed = seed;
  out.trials = trials;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    GenFun f = sample_genfun(rng, bounds);
    int k = f.period_bound();
    int d = f.pole_order();
    std::string repro = serialize_numerator(f.numerator());
    bool ok = true;
    auto fail = [&](const char* check, const std::string& detail) {
      ok = false;
      out.failures.push_back({t, repro, k, d, check, detail});
    };
    log_line(LogLevel::debug,
             "fuzz trial " + std::to_string(t) + ": -U '" + repro + "' -k " + std::to_string(k) +
                 " -d " + std::to_string(d));
    try {
      QuasiPoly closed = constituents_closed_form(f);
      QuasiPoly interp = interpolate_constituents(series_prefix(f, k * d), k, d);
      if (closed.constituents != interp.constituents)
        fail("closed-vs-interpolated", "constituent mismatch");

      NumeratorSplit split = split_numerator(f);
      bool all_nonzero = true;
      for (int i = 0; i < k; ++i) {
        if (split.classes[static_cast<size_t>(i)].part.is_zero()) {
          all_nonzero = false;
          continue;
        }
        FactoredConstituent fc = factor_constituent(f, i);
        if (fc.trivial * fc.cofactor * fc.scale != fc.constituent)
          fail("factorization", "scale*trivial*cofactor != constituent in class " + std::to_string(i));
        if (fc.constituent != closed.constituents[static_cast<size_t>(i)])
          fail("factorization", "per-class constituent differs from closed form in class " +
                                    std::to_string(i));
        for (long r : forced_integer_roots(fc))
          if (!fc.constituent(Rational(r)).is_zero())
            fail("forced-roots", "class " + std::to_string(i) + " does not vanish at " +
                                     std::to_string(r));
      }
      if (all_nonzero) {
        int e = *f.numerator().degree();
        RatPoly prod = product_poly(closed);
        for (long n = 1; n <= static_cast<long>(d) * k - e - 1; ++n)
          if (!prod(Rational(-n)).is_zero())
            fail("shared-roots", "product does not vanish at " + std::to_string(-n));
      }
    } catch (const Error& err) {
      fail("exception", err.what());
    }
    if (ok) ++out.passed;
  }
  return out;
}

}  // namespace quasihilb
