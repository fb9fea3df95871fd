#include <gtest/gtest.h>

#include <algorithm>

#include "bintail/errors.hpp"
#include "bintail/verify.hpp"

using namespace bintail;

namespace {

VerifyOptions options(long n_max, unsigned jobs = 1) {
  VerifyOptions o;
  o.n_max = n_max;
  o.jobs = jobs;
  return o;
}

std::vector<const Cell*> with_verdict(const VerificationReport& r, Verdict v) {
  std::vector<const Cell*> out;
  for (const Cell& c : r.cells) {
    if (c.verdict == v) out.push_back(&c);
  }
  return out;
}

const Cell* find_cell(const VerificationReport& r, std::string_view check) {
  for (const Cell& c : r.cells) {
    if (c.check == check) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Verdicts, RoundTripNames) {
  for (Verdict v : {Verdict::holds, Verdict::holds_with_equality, Verdict::violated, Verdict::indeterminate}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
  EXPECT_FALSE(parse_verdict("maybe").has_value());
}

TEST(Suites, PreconditionsOnNMax) {
  EXPECT_THROW(verify_lemma6(options(1)), RangeError);
  EXPECT_THROW(verify_theorem5(options(2)), RangeError);
  EXPECT_THROW(verify_eq2(options(3)), RangeError);
  EXPECT_THROW(verify_all(options(2)), RangeError);
  EXPECT_THROW(run_suite("lemma7", options(10)), ArgumentError);
  EXPECT_NO_THROW(verify_all(options(3)));
}

TEST(Suites, NamesAreRunnable) {
  const auto& names = suite_names();
  for (const char* required : {"lemma6", "theorem3", "theorem5", "eq2", "foundations", "all"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
  }
}

TEST(QuarterSuite, SingleEqualityAtTwoOne) {
  const VerificationReport r = verify_theorem3(options(60));
  EXPECT_TRUE(r.passed()) << summary_line(r);
  const auto equal = with_verdict(r, Verdict::holds_with_equality);
  ASSERT_EQ(equal.size(), 1u);
  EXPECT_EQ(equal[0]->check, "theorem3/lattice");
  EXPECT_EQ(equal[0]->params.n, 2);
  EXPECT_EQ(equal[0]->params.k, 1);
  for (const Cell& c : r.cells) {
    if (c.check != "theorem3/lattice") continue;
    for (const auto& [name, value] : c.witness.entries()) {
      if (name == "branch") EXPECT_NE(std::get<std::string>(value), "uncovered") << *c.params.n << "," << *c.params.k;
    }
  }
}

TEST(ShiftSuite, TwoWitnesses) {
  const VerificationReport r = verify_eq2(options(60));
  EXPECT_TRUE(r.passed());
  const Cell* violation = find_cell(r, "eq2/witness_violation");
  const Cell* reversal = find_cell(r, "eq2/witness_reversal");
  ASSERT_NE(violation, nullptr);
  ASSERT_NE(reversal, nullptr);
  EXPECT_EQ(violation->verdict, Verdict::holds);
  EXPECT_EQ(reversal->verdict, Verdict::holds);
  EXPECT_GT(*violation->params.k, *violation->params.n / 2);
  EXPECT_GT(*reversal->params.k, *reversal->params.n / 2);
}

// The bound sweeps at the sizes the shape and soundness properties name.
TEST(Suites, ShapeAndSoundnessSweepsToOneTwenty) {
  for (const char* suite : {"lemma6", "theorem5", "soundness"}) {
    const VerificationReport r = run_suite(suite, options(120));
    EXPECT_TRUE(r.passed()) << summary_line(r);
  }
  const VerificationReport t3 = verify_theorem3(options(120));
  EXPECT_TRUE(t3.passed()) << summary_line(t3);
}

TEST(Suites, FoundationsSmall) {
  const VerificationReport r = verify_foundations(options(40));
  EXPECT_TRUE(r.passed()) << summary_line(r);
  // t = 0 domination cells are the recorded equalities.
  for (const Cell* c : with_verdict(r, Verdict::holds_with_equality)) EXPECT_EQ(c->check, "foundations/domination_t0");
}

TEST(Report, JsonRoundTrip) {
  const VerificationReport r = verify_all(options(8));
  const std::string text = to_json(r);
  const VerificationReport back = report_from_json(text);
  EXPECT_EQ(to_json(back), text);
  EXPECT_EQ(back.summary, r.summary);
  EXPECT_EQ(back.cells.size(), r.cells.size());
  EXPECT_EQ(back.suites.size(), r.suites.size());
}

TEST(Report, DeterministicAcrossJobCounts) {
  EXPECT_EQ(to_json(verify_all(options(12, 1))), to_json(verify_all(options(12, 4))));
}

TEST(Report, DurationOnlyWhenTiming) {
  VerifyOptions o = options(6);
  EXPECT_FALSE(verify_lemma6(o).duration_s.has_value());
  o.timing = true;
  EXPECT_TRUE(verify_lemma6(o).duration_s.has_value());
}

TEST(Report, SummaryLine) {
  const VerificationReport r = verify_theorem3(options(10));
  const std::string line = summary_line(r);
  EXPECT_EQ(line.rfind("PASS theorem3", 0), 0u) << line;
  EXPECT_NE(line.find("holds_with_equality=1"), std::string::npos);
  EXPECT_NE(line.find("n_max=10"), std::string::npos);
}

TEST(Report, GridRecordsScope) {
  const VerificationReport r = verify_theorem5(options(5));
  const auto has = [&](const char* key) {
    return std::any_of(r.grid.begin(), r.grid.end(), [&](const auto& kv) { return kv.first == key; });
  };
  EXPECT_TRUE(has("n_max"));
  EXPECT_TRUE(has("scope"));
}

TEST(Report, EmptyReportDoesNotPass) {
  VerificationReport r;
  EXPECT_FALSE(r.passed());
}
