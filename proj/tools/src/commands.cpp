#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "bintail/bounds.hpp"
#include "bintail/errors.hpp"
#include "bintail/figures.hpp"
#include "bintail/verify.hpp"

namespace bintail::cli {
namespace {

constexpr const char* kPrecisionEnv = "BINOM_BOUNDS_PRECISION";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string bound;
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> t;
  std::optional<std::string> p;
  std::optional<std::string> variant;
  std::string suite = "all";
  long n_max = 60;
  std::optional<int> precision;
  std::optional<unsigned> jobs;
  std::string out_path;
  std::string format;
  long samples = 1000;
  bool timing = false;
  std::string figure;
};

int resolve_precision(const Options& o) {
  int bits = kDefaultPrecisionBits;
  if (o.precision) {
    bits = *o.precision;
  } else if (const char* env = std::getenv(kPrecisionEnv); env && *env) {
    try {
      std::size_t used = 0;
      bits = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw ArgumentError(std::string(kPrecisionEnv) + " is not an integer: '" + env + "'");
    }
  }
  if (bits < 16 || bits > kMaxPrecisionBits) {
    throw ArgumentError("precision must lie in [16.." + std::to_string(kMaxPrecisionBits) + "] bits, got " +
                        std::to_string(bits));
  }
  return bits;
}

unsigned resolve_jobs(const Options& o) {
  if (o.jobs) return std::max(1u, *o.jobs);
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string exact_or_empty(const Enclosure& e) { return e.is_exact() ? to_fraction_string(e.lo) : std::string(); }

int cmd_eval(const Options& o, std::ostream& out) {
  BoundQuery query;
  const auto id = parse_bound_id(o.bound);
  if (!id) throw ArgumentError("unknown bound '" + o.bound + "'");
  if (!o.n) throw ArgumentError("--n is required");
  query.id = *id;
  query.n = *o.n;
  query.k = o.k;
  query.t = o.t;
  if (o.p) query.p = parse_rational(*o.p);
  if (o.variant) {
    if (*o.variant == "a") query.variant = PlusOneVariant::a;
    else if (*o.variant == "b") query.variant = PlusOneVariant::b;
    else if (*o.variant == "c") query.variant = PlusOneVariant::c;
    else throw ArgumentError("--variant must be a, b or c");
  }
  const int bits = resolve_precision(o);
  const BoundValue v = evaluate(query, bits);

  std::ostringstream text;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["bound"] = std::string(to_string(v.id));
    doc["event"] = std::string(to_string(v.event));
    if (v.event == Event::ge_t) doc["t"] = v.threshold;
    doc["valid"] = v.valid;
    doc["strict"] = v.strict;
    const EnclosureText e = EnclosureText::of(v.value);
    doc["lo"] = e.lo;
    doc["hi"] = e.hi;
    doc["exact"] = v.value.is_exact() ? nlohmann::ordered_json(to_fraction_string(v.value.lo)) : nullptr;
    doc["precision"] = e.bits;
    text << doc.dump(1) << '\n';
  } else if (o.format == "csv") {
    const EnclosureText e = EnclosureText::of(v.value);
    text << "bound,event,t,valid,strict,lo,hi,exact,precision\n"
         << to_string(v.id) << ',' << to_string(v.event) << ','
         << (v.event == Event::ge_t ? std::to_string(v.threshold) : "") << ',' << (v.valid ? "true" : "false")
         << ',' << (v.strict ? "true" : "false") << ',' << e.lo << ',' << e.hi << ','
         << exact_or_empty(v.value) << ',' << e.bits << '\n';
  } else {
    const EnclosureText e = EnclosureText::of(v.value);
    text << "bound: " << to_string(v.id) << '\n' << "event: " << to_string(v.event);
    if (v.event == Event::ge_t) text << " (t = " << v.threshold << ")";
    text << '\n';
    if (v.value.is_exact()) {
      text << "value: " << to_fraction_string(v.value.lo) << " = " << decimal_or_significant(v.value.lo) << '\n';
    } else {
      text << "lo: " << e.lo << '\n' << "hi: " << e.hi << '\n' << "precision: " << e.bits << '\n';
    }
    text << "valid: " << (v.valid ? "true" : "false") << '\n'
         << "inequality: " << (v.strict ? "strict" : "non-strict") << '\n';
  }
  emit(text.str(), o.out_path, out);
  return kOk;
}

std::string param_text(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); }
std::string param_text(const std::optional<Rational>& v) { return v ? to_fraction_string(*v) : std::string(); }

std::string cells_csv(const VerificationReport& report) {
  std::ostringstream text;
  text << "check,n,k,t,p,q,x,alpha,verdict\n";
  for (const Cell& c : report.cells) {
    const CellParams& p = c.params;
    text << c.check << ',' << param_text(p.n) << ',' << param_text(p.k) << ',' << param_text(p.t) << ','
         << param_text(p.p) << ',' << param_text(p.q) << ',' << param_text(p.x) << ',' << param_text(p.alpha)
         << ',' << to_string(c.verdict) << '\n';
  }
  return text.str();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_max = o.n_max;
  options.precision_bits = resolve_precision(o);
  options.jobs = resolve_jobs(o);
  options.timing = o.timing;
  const VerificationReport report = run_suite(o.suite, options);
  const std::string body = o.format == "csv" ? cells_csv(report) : to_json(report);
  const bool to_stdout = o.out_path.empty() || o.out_path == "-";
  emit(body, o.out_path, out);
  (to_stdout ? err : out) << summary_line(report) << '\n';
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_figure(const Options& o, std::ostream& out) {
  FigureSpec spec;
  const auto id = parse_figure_id(o.figure);
  if (!id) throw ArgumentError("unknown figure '" + o.figure + "' (expected fig1, fig2 or fig3)");
  spec.figure = *id;
  spec.n = o.n.value_or(10);
  spec.sample_count = o.samples;
  spec.precision_bits = resolve_precision(o);
  const FigureTable table = figure_table(spec, resolve_jobs(o));
  emit(o.format == "json" ? to_json(table, spec) : to_csv(table), o.out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact binomial tails and certified lower bounds", "bintail"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate one bound");
  eval->add_option("--bound", o.bound, "Bound id")->required();
  eval->add_option("--n", o.n, "Number of trials");
  eval->add_option("--k", o.k, "Lattice index (p = k/n)");
  eval->add_option("--p", o.p, "Success probability, a/b or decimal");
  eval->add_option("--t", o.t, "Tail threshold (pelekis-k)");
  eval->add_option("--variant", o.variant, "plusone variant: a, b or c");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites;
  for (auto name : suite_names()) suites.emplace_back(name);
  verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", o.n_max, "Largest n swept");
  verify->add_option("--jobs", o.jobs, "Worker threads (default: processors)");
  verify->add_flag("--timing", o.timing, "Record wall-clock duration in the report");

  auto* figure = app.add_subcommand("figure", "Emit figure data");
  figure->add_option("figure", o.figure, "fig1, fig2 or fig3")->required();
  figure->add_option("--n", o.n, "Number of trials (fig1, fig3)");
  figure->add_option("--samples", o.samples, "Grid intervals");
  figure->add_option("--jobs", o.jobs, "Worker threads (default: processors)");

  for (auto* sub : {eval, verify, figure}) {
    sub->add_option("--precision", o.precision, "Starting precision in bits");
    sub->add_option("--out", o.out_path, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_figure(o, out);
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace bintail::cli
