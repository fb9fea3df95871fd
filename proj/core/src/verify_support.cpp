#include "verify_support.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "bintail/errors.hpp"
#include "bintail/parallel.hpp"

namespace bintail::detail {
namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::holds_with_equality: return 1;
    case Verdict::indeterminate: return 2;
    case Verdict::violated: return 3;
  }
  return 3;
}

std::string suite_of(const std::string& check) { return check.substr(0, check.find('/')); }

}  // namespace

Rational frac(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::vector<Cell> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<Cell> cells(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { cells[i] = tasks[i](); });
  return cells;
}

void finalize(VerificationReport& report, std::vector<Cell> cells) {
  const auto key = [](const Cell& c) {
    return std::tie(c.check, c.params.n, c.params.k, c.params.p, c.params.t, c.params.q, c.params.x, c.params.alpha);
  };
  std::stable_sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return key(a) < key(b); });

  report.summary = {};
  report.suites.clear();
  std::map<std::string, VerdictCounts> per_suite;
  for (const auto& cell : cells) {
    report.summary.tally(cell.verdict);
    per_suite[suite_of(cell.check)].tally(cell.verdict);
    report.max_precision_used = std::max(report.max_precision_used, cell.precision_used);
  }
  for (auto& [suite, counts] : per_suite) report.suites.push_back({suite, counts});
  report.cells = std::move(cells);
}

Verdict worst(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

namespace {

Decision certify_order(const Evaluator& value, const Rational& target, bool equality_expected, int start_bits,
                       bool value_is_lower) {
  Decision out;
  const int used = refine(start_bits, [&](int bits) {
    out.value = value(bits);
    out.bits = std::max(bits, out.value.precision_bits);
    const Placement where = place(out.value, target);
    const Placement good = value_is_lower ? Placement::below : Placement::above;
    if (where == good) {
      out.verdict = Verdict::holds;
    } else if (where == Placement::equal) {
      out.verdict = equality_expected ? Verdict::holds_with_equality : Verdict::violated;
    } else if (where == Placement::straddles) {
      return false;
    } else {
      out.verdict = Verdict::violated;
    }
    return true;
  });
  if (used == 0) out.verdict = Verdict::indeterminate;
  return out;
}

}  // namespace

Decision certify_at_most(const Evaluator& value, const Rational& target, bool equality_expected, int start_bits) {
  return certify_order(value, target, equality_expected, start_bits, true);
}

Decision certify_at_least(const Evaluator& value, const Rational& target, bool equality_expected, int start_bits) {
  return certify_order(value, target, equality_expected, start_bits, false);
}

Separation certify_less(const Evaluator& smaller, const Evaluator& larger, bool allow_equal, int start_bits) {
  Separation out;
  const int used = refine(start_bits, [&](int bits) {
    out.smaller = smaller(bits);
    out.larger = larger(bits);
    out.bits = std::max({bits, out.smaller.precision_bits, out.larger.precision_bits});
    if (out.smaller.hi < out.larger.lo) {
      out.verdict = Verdict::holds;
      return true;
    }
    if (out.smaller.lo > out.larger.hi) {
      out.verdict = Verdict::violated;
      return true;
    }
    if (out.smaller.is_exact() && out.larger.is_exact()) {
      out.verdict = allow_equal ? Verdict::holds_with_equality : Verdict::violated;
      return true;
    }
    return false;
  });
  if (used == 0) out.verdict = Verdict::indeterminate;
  return out;
}

Verdict compare_at_least(const Rational& value, const Rational& target, bool equality_expected) {
  const int c = cmp(value, target);
  if (c > 0) return Verdict::holds;
  if (c == 0 && equality_expected) return Verdict::holds_with_equality;
  return Verdict::violated;
}

Truncation certify_truncation(const Evaluator& value, int places, const std::string& expected, int start_bits) {
  Truncation out;
  const int used = refine(start_bits, [&](int bits) {
    out.value = value(bits);
    out.bits = std::max(bits, out.value.precision_bits);
    const std::string lo = truncated_decimal(out.value.lo, places);
    const std::string hi = truncated_decimal(out.value.hi, places);
    if (lo != hi) return false;
    out.digits = lo;
    out.verdict = lo == expected ? Verdict::holds : Verdict::violated;
    return true;
  });
  if (used == 0) out.verdict = Verdict::indeterminate;
  return out;
}

std::vector<Rational> bin_samples(long n, long k, int count) {
  std::vector<Rational> out;
  const long limit = std::min<long>(count, 2 * n - 1);
  for (long j = 1; j <= limit; ++j) out.push_back(frac(2 * k * n + j, 2 * n * n));
  return out;
}

void require_n_max(const char* suite, long n_max, long minimum) {
  if (n_max < minimum) {
    throw RangeError(std::string(suite) + ": requires n_max >= " + std::to_string(minimum) + ", got " +
                     std::to_string(n_max));
  }
}

}  // namespace bintail::detail
