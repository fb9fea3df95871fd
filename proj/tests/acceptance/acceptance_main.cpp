// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bintail/bounds.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/figures.hpp"
#include "bintail/verify.hpp"
#include "commands.hpp"
#include "oracle.hpp"

using namespace bintail;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VerifyOptions sweep(long n_max) {
  VerifyOptions o;
  o.n_max = n_max;
  return o;
}

const Rational kTenToMinus20(1, Integer("100000000000000000000"));

// Every cell with the given check name must have the given verdict.
void require_cells(Outcome& o, const VerificationReport& r, const std::string& check, Verdict expected,
                   std::size_t min_count) {
  std::size_t count = 0;
  for (const Cell& c : r.cells) {
    if (c.check != check) continue;
    ++count;
    if (c.verdict != expected) {
      std::ostringstream what;
      what << check << " n=" << c.params.n.value_or(0) << " k=" << c.params.k.value_or(0) << " is "
           << to_string(c.verdict);
      o.require(false, what.str());
    }
  }
  o.require(count >= min_count, check + ": expected at least " + std::to_string(min_count) + " cells, got " +
                                    std::to_string(count));
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const Rational ten = prob_exceeds_mean(BinomialSpec(10, Rational(1, 2))).value();
  o.require(ten == Rational(193, 512), "Pr[Bin(10,1/2) > 5] != 193/512");
  o.require(exact_decimal(ten).value_or("") == "0.376953125", "decimal form of n=10 anchor");
  o.require(ten == oracle::tail_ge(10, Rational(1, 2), 6), "n=10 anchor disagrees with convolution oracle");
  const Rational hundred = prob_exceeds_mean(BinomialSpec(100, Rational(1, 2))).value();
  Rational diff = hundred - parse_rational("0.460205381");
  if (diff < 0) diff = -diff;
  o.require(diff <= Rational(5, Integer("10000000000")), "n=100 anchor off by more than 5e-10");
  o.require(hundred == oracle::tail_ge(100, Rational(1, 2), 51), "n=100 anchor disagrees with convolution oracle");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(seconds_since(start)) + "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  const VerificationReport r = verify_theorem3(sweep(100));
  const double elapsed = seconds_since(start);
  std::size_t lattice = 0;
  for (const Cell& c : r.cells) {
    if (c.check != "theorem3/lattice") continue;
    ++lattice;
    const bool at_two_one = c.params.n == 2 && c.params.k == 1;
    const Verdict expected = at_two_one ? Verdict::holds_with_equality : Verdict::holds;
    if (c.verdict != expected) {
      o.require(false, "lattice (" + std::to_string(*c.params.n) + "," + std::to_string(*c.params.k) + ") is " +
                           std::string(to_string(c.verdict)));
    }
  }
  o.require(lattice == 99 * 100 / 2, "expected 4950 lattice cells, got " + std::to_string(lattice));
  require_cells(o, r, "theorem3/footnote", Verdict::holds, 4);
  o.require(elapsed < 120, "runtime " + std::to_string(elapsed) + "s exceeds 2 minutes");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = Clock::now();
  const VerificationReport r = verify_theorem5(sweep(100));
  const double elapsed = seconds_since(start);
  require_cells(o, r, "theorem5/lattice", Verdict::holds, 98 * 99 / 2);
  require_cells(o, r, "theorem5/h_anchor", Verdict::holds, 5);
  require_cells(o, r, "theorem5/q_anchor", Verdict::holds, 4);
  o.require(elapsed < 120, "runtime " + std::to_string(elapsed) + "s exceeds 2 minutes");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const VerificationReport r = verify_lemma6(sweep(100));
  require_cells(o, r, "lemma6/lattice", Verdict::holds, 99 * 100 / 2);
  require_cells(o, r, "lemma6/anchor", Verdict::holds, 2);
  for (long n = 2; n <= 100; ++n) {
    for (long k = 1; k < n; ++k) {
      const Enclosure g = bound_g(n, k).value;
      if (!(g.width() < kTenToMinus20)) {
        o.require(false, "g(" + std::to_string(n) + "," + std::to_string(k) + ") wider than 1e-20");
      }
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto start = Clock::now();
  const VerificationReport r = verify_eq2(sweep(60));
  const double elapsed = seconds_since(start);
  require_cells(o, r, "eq2/lower_range", Verdict::holds, 1);
  for (const char* check : {"eq2/witness_violation", "eq2/witness_reversal"}) {
    require_cells(o, r, check, Verdict::holds, 1);
    for (const Cell& c : r.cells) {
      if (c.check != check || !c.params.n) continue;
      o.require(*c.params.n <= 60 && *c.params.k > *c.params.n / 2, std::string(check) + " outside k > n/2, n <= 60");
    }
  }
  o.require(elapsed < 60, "runtime " + std::to_string(elapsed) + "s exceeds 1 minute");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const VerificationReport r = verify_foundations(sweep(500));
  o.require(r.passed(), summary_line(r));
  o.require(r.summary.indeterminate == 0, "indeterminate cells present");
  o.require(r.max_precision_used <= kMaxPrecisionBits, "precision above cap");
  require_cells(o, r, "foundations/robbins", Verdict::holds, 500);
  require_cells(o, r, "foundations/binomial_coefficient", Verdict::holds, 149);
  require_cells(o, r, "foundations/pmf_bound", Verdict::holds, 199);
  require_cells(o, r, "foundations/domination", Verdict::holds, 60 * 28);
  require_cells(o, r, "foundations/median_mode", Verdict::holds, 199);
  require_cells(o, r, "foundations/normalization", Verdict::holds, 200);
  for (const char* kind : {"pow_inc", "pow_dec", "pair_sum"}) {
    require_cells(o, r, std::string("foundations/monotone_") + kind, Verdict::holds, 80);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Enclosure anchor = bound_pelekis_ramon(32, Rational(1, 2)).value;
  o.require(anchor.contains(Rational(1, 4)), "pr16(32,1/2) does not contain 1/4");
  o.require(anchor.width() < kTenToMinus20, "pr16(32,1/2) wider than 1e-20");
  const Rational cap = parse_rational("0.35356");
  for (long n : {10L, 100L}) {
    for (long i = 0; i <= 1000; ++i) {
      const Enclosure v = bound_pelekis_ramon(n, Rational(i, 1000)).value;
      if (!(v.hi < cap)) o.require(false, "pr16 reaches 0.35356 at n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "bintail_acceptance";
  std::filesystem::create_directories(dir);
  std::string bodies[2];
  const char* jobs[2] = {"1", "8"};
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / (std::string("all_jobs") + jobs[i] + ".json");
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--suite", "all", "--n-max", "60", "--jobs", jobs[i], "--out", path.string()},
                              out, err);
    o.require(code == 0, std::string("--jobs ") + jobs[i] + " exit " + std::to_string(code) + " " + err.str());
    std::ifstream in(path, std::ios::binary);
    bodies[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  o.require(!bodies[0].empty(), "empty report");
  o.require(bodies[0] == bodies[1], "reports differ between --jobs 1 and --jobs 8");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact figure anchors", criterion1},
      {"quarter bound lattice sweep n <= 100", criterion2},
      {"exceed-by-one bound lattice sweep n <= 100", criterion3},
      {"g(n,k) soundness n <= 100", criterion4},
      {"shift inequality lower range and witnesses", criterion5},
      {"foundations", criterion6},
      {"pelekis-ramon anchor and cap", criterion7},
      {"determinism across --jobs", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << std::endl;
  }
  return failures;
}
