#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bintail/enclosure.hpp"
#include "bintail/rational.hpp"

namespace bintail {

enum class Verdict { holds, holds_with_equality, violated, indeterminate };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Serialized form of an enclosure: directed-rounded decimal endpoints.
struct EnclosureText {
  std::string lo;
  std::string hi;
  int bits = 0;

  static EnclosureText of(const Enclosure& e);
  friend bool operator==(const EnclosureText&, const EnclosureText&) = default;
};

using WitnessValue = std::variant<bool, long, std::string, EnclosureText>;

/// Ordered name/value evidence attached to a cell.
class Witness {
 public:
  Witness& add(std::string name, WitnessValue value);
  Witness& add(std::string name, const Rational& exact);  // "num/den"
  Witness& add(std::string name, const Enclosure& value);
  Witness& add(std::string name, bool flag) { return add(std::move(name), WitnessValue{flag}); }
  Witness& add(std::string name, const char* text) { return add(std::move(name), WitnessValue{std::string(text)}); }

  const std::vector<std::pair<std::string, WitnessValue>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, WitnessValue>> entries_;
};

struct CellParams {
  std::optional<long> n = std::nullopt;
  std::optional<long> k = std::nullopt;
  std::optional<long> t = std::nullopt;
  std::optional<Rational> p = std::nullopt;
  std::optional<Rational> q = std::nullopt;
  std::optional<Rational> x = std::nullopt;
  std::optional<Rational> alpha = std::nullopt;
};

struct Cell {
  std::string check;
  CellParams params;
  Verdict verdict = Verdict::indeterminate;
  Witness witness;
  /// Highest working precision used while deciding this cell (not serialized).
  int precision_used = 0;
};

struct VerdictCounts {
  std::size_t holds = 0;
  std::size_t holds_with_equality = 0;
  std::size_t violated = 0;
  std::size_t indeterminate = 0;

  void tally(Verdict v);
  std::size_t total() const { return holds + holds_with_equality + violated + indeterminate; }
  bool passes() const { return violated == 0 && indeterminate == 0; }
  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

struct SuiteSummary {
  std::string suite;
  VerdictCounts counts;
};

/// Result of one verification suite. Claims quantified over all n are only
/// certified up to the swept n_max, which the grid records.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> grid;
  std::vector<Cell> cells;
  VerdictCounts summary;
  std::vector<SuiteSummary> suites;
  int max_precision_used = 0;
  std::optional<double> duration_s;

  bool passed() const { return summary.passes() && !cells.empty(); }
};

struct VerifyOptions {
  long n_max = 60;
  int precision_bits = kDefaultPrecisionBits;
  unsigned jobs = 1;
  /// Record wall-clock duration in the report (breaks byte-identical output).
  bool timing = false;
};

/// Sweep caps for verify_foundations; each is further capped by n_max.
struct FoundationLimits {
  long normalization_n = 200;
  long domination_n = 60;
  long median_mode_n = 200;
  long robbins_n = 500;
  long corollary_n = 150;
  long pmf_bound_n = 200;
};

VerificationReport verify_lemma6(const VerifyOptions& options);
VerificationReport verify_theorem3(const VerifyOptions& options);
VerificationReport verify_theorem5(const VerifyOptions& options);
VerificationReport verify_eq2(const VerifyOptions& options);
VerificationReport verify_foundations(const VerifyOptions& options, const FoundationLimits& limits = {});
VerificationReport verify_soundness(const VerifyOptions& options);
VerificationReport verify_all(const VerifyOptions& options);

/// Suite names accepted by run_suite.
const std::vector<std::string_view>& suite_names();

/// Runs a suite by name; ArgumentError for unknown names, RangeError when
/// n_max violates the suite's precondition.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options);

std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view text);

/// "PASS theorem3 ..." / "FAIL ..." with verdict counts.
std::string summary_line(const VerificationReport& report);

}  // namespace bintail
