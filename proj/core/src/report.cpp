#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

#include "bintail/errors.hpp"
#include "bintail/verify.hpp"

namespace bintail {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdicts{{
    {Verdict::holds, "holds"},
    {Verdict::holds_with_equality, "holds_with_equality"},
    {Verdict::violated, "violated"},
    {Verdict::indeterminate, "indeterminate"},
}};

Json counts_json(const VerdictCounts& c) {
  Json out;
  out["holds"] = c.holds;
  out["holds_with_equality"] = c.holds_with_equality;
  out["violated"] = c.violated;
  out["indeterminate"] = c.indeterminate;
  out["total"] = c.total();
  out["pass"] = c.passes();
  return out;
}

VerdictCounts counts_from(const Json& j) {
  VerdictCounts c;
  c.holds = j.at("holds").get<std::size_t>();
  c.holds_with_equality = j.at("holds_with_equality").get<std::size_t>();
  c.violated = j.at("violated").get<std::size_t>();
  c.indeterminate = j.at("indeterminate").get<std::size_t>();
  return c;
}

Json params_json(const CellParams& p) {
  Json out = Json::object();
  if (p.n) out["n"] = *p.n;
  if (p.k) out["k"] = *p.k;
  if (p.t) out["t"] = *p.t;
  if (p.p) out["p"] = to_fraction_string(*p.p);
  if (p.q) out["q"] = to_fraction_string(*p.q);
  if (p.x) out["x"] = to_fraction_string(*p.x);
  if (p.alpha) out["alpha"] = to_fraction_string(*p.alpha);
  return out;
}

CellParams params_from(const Json& j) {
  CellParams p;
  if (j.contains("n")) p.n = j["n"].get<long>();
  if (j.contains("k")) p.k = j["k"].get<long>();
  if (j.contains("t")) p.t = j["t"].get<long>();
  if (j.contains("p")) p.p = parse_rational(j["p"].get<std::string>());
  if (j.contains("q")) p.q = parse_rational(j["q"].get<std::string>());
  if (j.contains("x")) p.x = parse_rational(j["x"].get<std::string>());
  if (j.contains("alpha")) p.alpha = parse_rational(j["alpha"].get<std::string>());
  return p;
}

Json witness_json(const Witness& w) {
  Json out = Json::object();
  for (const auto& [name, value] : w.entries()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, EnclosureText>) {
            out[name] = Json{{"lo", v.lo}, {"hi", v.hi}, {"bits", v.bits}};
          } else {
            out[name] = v;
          }
        },
        value);
  }
  return out;
}

Witness witness_from(const Json& j) {
  Witness w;
  for (const auto& [name, value] : j.items()) {
    if (value.is_boolean()) {
      w.add(name, WitnessValue{value.get<bool>()});
    } else if (value.is_number_integer()) {
      w.add(name, WitnessValue{value.get<long>()});
    } else if (value.is_string()) {
      w.add(name, WitnessValue{value.get<std::string>()});
    } else if (value.is_object()) {
      w.add(name, WitnessValue{EnclosureText{value.at("lo").get<std::string>(), value.at("hi").get<std::string>(),
                                             value.at("bits").get<int>()}});
    } else {
      throw ArgumentError("report: unsupported witness value for '" + name + "'");
    }
  }
  return w;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  for (const auto& [v, name] : kVerdicts) {
    if (v == verdict) return name;
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto& [v, name] : kVerdicts) {
    if (name == text) return v;
  }
  return std::nullopt;
}

EnclosureText EnclosureText::of(const Enclosure& e) {
  if (e.is_exact()) {
    const std::string text = decimal_or_significant(e.lo, 30);
    if (exact_decimal(e.lo)) return {text, text, e.precision_bits};
  }
  return {lower_text(e), upper_text(e), e.precision_bits};
}

Witness& Witness::add(std::string name, WitnessValue value) {
  entries_.emplace_back(std::move(name), std::move(value));
  return *this;
}

Witness& Witness::add(std::string name, const Rational& exact) {
  return add(std::move(name), WitnessValue{to_fraction_string(exact)});
}

Witness& Witness::add(std::string name, const Enclosure& value) {
  return add(std::move(name), WitnessValue{EnclosureText::of(value)});
}

void VerdictCounts::tally(Verdict v) {
  switch (v) {
    case Verdict::holds: ++holds; break;
    case Verdict::holds_with_equality: ++holds_with_equality; break;
    case Verdict::violated: ++violated; break;
    case Verdict::indeterminate: ++indeterminate; break;
  }
}

std::string to_json(const VerificationReport& report) {
  Json out;
  out["suite"] = report.suite;
  Json grid = Json::object();
  for (const auto& [key, value] : report.grid) grid[key] = value;
  out["grid"] = std::move(grid);
  Json cells = Json::array();
  for (const auto& cell : report.cells) {
    Json c;
    c["check"] = cell.check;
    c["params"] = params_json(cell.params);
    c["verdict"] = std::string(to_string(cell.verdict));
    c["witness"] = witness_json(cell.witness);
    cells.push_back(std::move(c));
  }
  out["cells"] = std::move(cells);
  out["summary"] = counts_json(report.summary);
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json entry;
    entry["suite"] = s.suite;
    entry["counts"] = counts_json(s.counts);
    suites.push_back(std::move(entry));
  }
  out["suites"] = std::move(suites);
  out["precision"] = report.max_precision_used;
  out["duration_s"] = report.duration_s ? Json(*report.duration_s) : Json(nullptr);
  return out.dump(1) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("report: invalid JSON: ") + e.what());
  }
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& [key, value] : j.at("grid").items()) r.grid.emplace_back(key, value.get<std::string>());
  for (const auto& c : j.at("cells")) {
    Cell cell;
    cell.check = c.at("check").get<std::string>();
    cell.params = params_from(c.at("params"));
    auto verdict = parse_verdict(c.at("verdict").get<std::string>());
    if (!verdict) throw ArgumentError("report: unknown verdict");
    cell.verdict = *verdict;
    cell.witness = witness_from(c.at("witness"));
    r.cells.push_back(std::move(cell));
  }
  r.summary = counts_from(j.at("summary"));
  for (const auto& s : j.at("suites")) {
    r.suites.push_back({s.at("suite").get<std::string>(), counts_from(s.at("counts"))});
  }
  r.max_precision_used = j.at("precision").get<int>();
  if (!j.at("duration_s").is_null()) r.duration_s = j.at("duration_s").get<double>();
  return r;
}

std::string summary_line(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.passed() ? "PASS" : "FAIL") << ' ' << report.suite << ": holds=" << report.summary.holds
      << " holds_with_equality=" << report.summary.holds_with_equality << " violated=" << report.summary.violated
      << " indeterminate=" << report.summary.indeterminate;
  for (const auto& [key, value] : report.grid) {
    if (key == "n_max") out << " n_max=" << value;
  }
  if (report.duration_s) out << " duration_s=" << *report.duration_s;
  return out.str();
}

}  // namespace bintail
