#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>

#include "bintail/enclosure.hpp"
#include "bintail/estimates.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/verify.hpp"
#include "verify_support.hpp"

namespace bintail::detail {
std::vector<Task> foundations_tasks(const VerifyOptions& options, const FoundationLimits& limits);

namespace {

Cell make_cell(std::string check, CellParams params) {
  Cell cell;
  cell.check = std::move(check);
  cell.params = std::move(params);
  return cell;
}

// Per-n sweeps keep the first failing index in the witness.
struct Sweep {
  Verdict verdict = Verdict::holds;
  long checked = 0;
  std::optional<long> first_failure;
  int bits = 0;

  void record(long index, Verdict v, int used = 0) {
    ++checked;
    bits = std::max(bits, used);
    if (v != Verdict::holds && !first_failure) first_failure = index;
    verdict = worst(verdict, v);
  }
  void write(Cell& cell, const char* index_name) const {
    cell.verdict = verdict;
    cell.precision_used = bits;
    cell.witness.add("checked", WitnessValue{checked});
    if (first_failure) cell.witness.add(std::string("first_failing_") + index_name, WitnessValue{*first_failure});
  }
};

const std::array<Rational, 8>& domination_grid() {
  static const std::array<Rational, 8> grid{frac(0, 1), frac(1, 7), frac(1, 4), frac(1, 3),
                                            frac(1, 2), frac(3, 5), frac(5, 6), frac(1, 1)};
  return grid;
}

Cell normalization_cell(long n) {
  Cell cell = make_cell("foundations/normalization", {.n = n});
  std::set<Rational> ps{frac(1, 3), frac(2, 7), frac(9, 10)};
  for (long a = 0; a <= n; ++a) ps.insert(frac(a, n));
  Sweep sweep;
  long index = 0;
  for (const Rational& p : ps) {
    const BinomialSpec spec(n, p);
    const PmfTable table = pmf_table(spec);
    Integer total = 0;
    for (const auto& w : table.weights) total += w;
    const long t = spec.floor_mean() + 1;
    const Rational forward = tail_ge(spec, t, TailOrder::upper_sum).value();
    const Rational backward = tail_ge(spec, t, TailOrder::lower_complement).value();
    const Rational via_cdf = 1 - cdf(spec, t - 1, TailOrder::upper_sum).value();
    const bool ok = total == table.denominator && forward == backward && forward == via_cdf &&
                    forward == prob_exceeds_mean(spec).value();
    sweep.record(index++, ok ? Verdict::holds : Verdict::violated);
  }
  sweep.write(cell, "p_index");
  return cell;
}

Cell domination_cell(long n, const Rational& p, const Rational& q) {
  Cell cell = make_cell("foundations/domination", {.n = n, .p = p, .q = q});
  Sweep sweep;
  for (long t = 1; t <= n; ++t) {
    sweep.record(t, check_domination(n, p, q, t) == Domination::strict ? Verdict::holds : Verdict::violated);
  }
  sweep.write(cell, "t");
  return cell;
}

// At t = 0 both tails are 1, so equality is the expected outcome.
Cell domination_zero_cell(long n) {
  Cell cell = make_cell("foundations/domination_t0", {.n = n, .t = 0});
  Verdict verdict = Verdict::holds_with_equality;
  const auto& grid = domination_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (check_domination(n, grid[i], grid[j], 0) != Domination::equal) verdict = Verdict::violated;
    }
  }
  cell.verdict = verdict;
  return cell;
}

Cell median_mode_cell(long n) {
  Cell cell = make_cell("foundations/median_mode", {.n = n});
  Sweep sweep;
  for (long k = 1; k <= n - 1; ++k) {
    const BinomialSpec spec(n, frac(k, n));
    const Median m = median(spec);
    const auto weights = pmf_table(spec).weights;
    const Integer& at_k = weights[static_cast<std::size_t>(k)];
    const bool is_mode = std::all_of(weights.begin(), weights.end(), [&](const Integer& w) { return w <= at_k; });
    const bool ok = m.value == k && m.unique && tail_ge(spec, k).value() >= frac(1, 2) && is_mode && mode(spec) == k;
    sweep.record(k, ok ? Verdict::holds : Verdict::violated);
  }
  sweep.write(cell, "k");
  return cell;
}

Cell robbins_cell(long n, int bits) {
  Cell cell = make_cell("foundations/robbins", {.n = n});
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  const Rational exact(fact);
  try {
    const FactorialBounds b = robbins_factorial_bounds(n, bits);
    const bool ok = b.lower.hi < exact && exact < b.upper.lo;
    cell.verdict = ok ? Verdict::holds : Verdict::violated;
    cell.precision_used = std::max(b.lower.precision_bits, b.upper.precision_bits);
    cell.witness.add("lower", b.lower).add("upper", b.upper);
  } catch (const IndeterminateError& e) {
    cell.verdict = Verdict::indeterminate;
    cell.precision_used = kMaxPrecisionBits;
    cell.witness.add("last", e.last());
  }
  return cell;
}

Cell corollary_cell(long n, int bits) {
  Cell cell = make_cell("foundations/binomial_coefficient", {.n = n});
  const Rational floor_arg = frac(-1, 6) + frac(1, 25);
  Sweep sweep;
  for (long k = 1; k <= n - 1; ++k) {
    const long m = n - k;
    // Exponents of the two correction brackets.
    const Rational lower_arg = -frac(1, 12 * k) - frac(1, 12 * m) + frac(1, 12 * n + 1);
    const Rational upper_arg = -frac(1, 12 * k + 1) - frac(1, 12 * m + 1) + frac(1, 12 * n);
    Integer exact;
    mpz_bin_uiui(exact.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    try {
      const auto b = binom_coeff_enclosure(n, k, bits);
      const bool ok = b.lower.hi < exact && Rational(exact) < b.upper.lo && lower_arg >= floor_arg && upper_arg < 0;
      sweep.record(k, ok ? Verdict::holds : Verdict::violated,
                   std::max(b.lower.precision_bits, b.upper.precision_bits));
    } catch (const IndeterminateError&) {
      sweep.record(k, Verdict::indeterminate, kMaxPrecisionBits);
    }
  }
  sweep.write(cell, "k");
  return cell;
}

Cell pmf_bound_cell(long n, int bits) {
  Cell cell = make_cell("foundations/pmf_bound", {.n = n});
  Sweep sweep;
  for (long k = 1; k <= n - 1; ++k) {
    // The lattice point maximizes pmf(., k) over p; the nearby samples
    // cover the bound's use away from the lattice.
    Rational largest = pmf(BinomialSpec(n, frac(k, n)), k).value();
    const long limit = std::min<long>(5, 2 * n - 1);
    for (long j = 1; j <= limit; ++j) {
      for (const Rational& p : {frac(2 * k * n + j, 2 * n * n), frac(2 * k * n - j, 2 * n * n)}) {
        largest = std::max(largest, pmf(BinomialSpec(n, p), k).value());
      }
    }
    const auto d = certify_at_least([=](int b) { return pmf_upper_bound(n, k, b); }, largest, false, bits);
    sweep.record(k, d.verdict, d.bits);
  }
  sweep.write(cell, "k");
  return cell;
}

Cell monotone_cell(MonoKind kind, const Rational& alpha, const Rational& x0, const Rational& x1, bool increasing,
                   int bits) {
  Cell cell = make_cell("foundations/monotone_" + std::string(to_string(kind)), {.x = x0, .alpha = alpha});
  const Evaluator at0 = [=](int b) { return mono_expr(kind, x0, alpha, b); };
  const Evaluator at1 = [=](int b) { return mono_expr(kind, x1, alpha, b); };
  const auto s = increasing ? certify_less(at0, at1, true, bits) : certify_less(at1, at0, true, bits);
  cell.verdict = s.verdict;
  cell.precision_used = s.bits;
  cell.witness.add("x_next", x1).add("value", increasing ? s.smaller : s.larger)
      .add("value_next", increasing ? s.larger : s.smaller);
  return cell;
}

}  // namespace

std::vector<Task> foundations_tasks(const VerifyOptions& o, const FoundationLimits& limits) {
  std::vector<Task> tasks;
  const int bits = o.precision_bits;
  const auto cap = [&](long limit) { return std::min<long>(limit, o.n_max); };

  for (long n = 1; n <= cap(limits.normalization_n); ++n) tasks.emplace_back([=] { return normalization_cell(n); });

  const auto& grid = domination_grid();
  for (long n = 1; n <= cap(limits.domination_n); ++n) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        tasks.emplace_back([=, p = grid[i], q = grid[j]] { return domination_cell(n, p, q); });
      }
    }
    tasks.emplace_back([=] { return domination_zero_cell(n); });
  }
  tasks.emplace_back([] {
    Cell cell = make_cell("foundations/domination_anchor", {.n = 2, .t = 1, .p = frac(3, 10), .q = frac(1, 2)});
    const Domination d = check_domination(2, frac(3, 10), frac(1, 2), 1);
    cell.verdict = d == Domination::strict ? Verdict::holds : Verdict::violated;
    cell.witness.add("result", WitnessValue{std::string(to_string(d))});
    return cell;
  });

  for (long n = 2; n <= cap(limits.median_mode_n); ++n) tasks.emplace_back([=] { return median_mode_cell(n); });
  tasks.emplace_back([] {
    Cell cell = make_cell("foundations/median_anchor", {.n = 10, .p = frac(3, 10)});
    const Median m = median(BinomialSpec(10, frac(3, 10)));
    cell.verdict = (m.value == 3 && m.unique) ? Verdict::holds : Verdict::violated;
    cell.witness.add("median", WitnessValue{m.value}).add("unique", WitnessValue{m.unique});
    return cell;
  });

  for (long n = 1; n <= cap(limits.robbins_n); ++n) tasks.emplace_back([=] { return robbins_cell(n, bits); });
  tasks.emplace_back([=] {
    Cell cell = make_cell("foundations/robbins_constant", {.n = 1});
    const auto [lower, upper] = robbins_correction(1, bits);
    const Verdict above_one = lower.lo > 1 ? Verdict::holds : Verdict::violated;
    const auto d = certify_at_most([=](int b) { return robbins_correction(1, b).second; }, frac(108690405, 100000000),
                                   false, bits);
    cell.verdict = worst(above_one, d.verdict);
    cell.precision_used = d.bits;
    cell.witness.add("lower", lower).add("upper", d.value);
    return cell;
  });

  for (long n = 2; n <= cap(limits.corollary_n); ++n) tasks.emplace_back([=] { return corollary_cell(n, bits); });
  tasks.emplace_back([=] {
    Cell cell = make_cell("foundations/binomial_coefficient_constant", {});
    const auto t = certify_truncation([](int b) { return binom_correction_floor(b); }, 8, "0.88102729", bits);
    cell.verdict = t.verdict;
    cell.precision_used = t.bits;
    cell.witness.add("value", t.value).add("truncated", WitnessValue{t.digits});
    return cell;
  });

  for (long n = 2; n <= cap(limits.pmf_bound_n); ++n) tasks.emplace_back([=] { return pmf_bound_cell(n, bits); });

  const std::array<Rational, 4> alphas{frac(0, 1), frac(1, 2), frac(1, 1), frac(2, 1)};
  for (const Rational& alpha : alphas) {
    for (long i = 0; i < 80; ++i) {
      tasks.emplace_back([=] {
        return monotone_cell(MonoKind::pow_inc, alpha, 1 + frac(i, 8), 1 + frac(i + 1, 8), true, bits);
      });
    }
    for (long i = 1; i < 88; ++i) {
      tasks.emplace_back([=] {
        return monotone_cell(MonoKind::pow_dec, alpha, frac(i, 8), frac(i + 1, 8), false, bits);
      });
    }
  }
  for (long i = 0; i < 80; ++i) {
    tasks.emplace_back([=] {
      return monotone_cell(MonoKind::pair_sum, frac(0, 1), 1 + frac(i, 8), 1 + frac(i + 1, 8), false, bits);
    });
  }
  return tasks;
}

}  // namespace bintail::detail
