#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bintail/enclosure.hpp"
#include "bintail/verify.hpp"

namespace bintail::detail {

using Task = std::function<Cell()>;
using Evaluator = std::function<Enclosure(int bits)>;

Rational frac(long num, long den);

/// Runs tasks on `jobs` workers; results keep task order.
std::vector<Cell> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

/// Sorts cells by (check, n, k, p, t, q, x, alpha), tallies the summary and
/// the per-suite counts, and records the maximal precision used.
void finalize(VerificationReport& report, std::vector<Cell> cells);

/// Severity order: holds < holds_with_equality < indeterminate < violated.
Verdict worst(Verdict a, Verdict b);

struct Decision {
  Verdict verdict = Verdict::indeterminate;
  Enclosure value;
  int bits = 0;
};

/// Certifies value <= target. An exactly equal value yields
/// holds_with_equality when `equality_expected` and violated otherwise, so
/// only registered equalities pass.
Decision certify_at_most(const Evaluator& value, const Rational& target, bool equality_expected, int start_bits);

/// Certifies value >= target, with the same equality rule.
Decision certify_at_least(const Evaluator& value, const Rational& target, bool equality_expected, int start_bits);

struct Separation {
  Verdict verdict = Verdict::indeterminate;
  Enclosure smaller;
  Enclosure larger;
  int bits = 0;
};

/// Certifies smaller < larger by separating enclosures; two exact and equal
/// values count as holds_with_equality when `allow_equal`.
Separation certify_less(const Evaluator& smaller, const Evaluator& larger, bool allow_equal, int start_bits);

/// Exact comparison value >= target, with the same equality rule.
Verdict compare_at_least(const Rational& value, const Rational& target, bool equality_expected);

struct Truncation {
  Verdict verdict = Verdict::indeterminate;
  std::string digits;
  Enclosure value;
  int bits = 0;
};

/// Truncates the enclosed value toward zero at `places` decimals once both
/// endpoints agree, and compares with `expected`.
Truncation certify_truncation(const Evaluator& value, int places, const std::string& expected, int start_bits);

/// Deterministic non-lattice points in the bin floor(np) = k:
/// (2kn + j) / (2n^2) for j in [1..min(count, 2n-1)].
std::vector<Rational> bin_samples(long n, long k, int count = 5);

void require_n_max(const char* suite, long n_max, long minimum);

}  // namespace bintail::detail
