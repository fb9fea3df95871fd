#include "bintail/exact_dist.hpp"

#include <string>
#include <vector>

#include "bintail/errors.hpp"

namespace bintail {
namespace {

// Pr[X = i] = w_i / b^n with w_i = C(n,i) a^i (b-a)^(n-i), p = a/b.
struct Weights {
  Integer a;
  Integer c;  // b - a
  Integer total;  // b^n
};

Weights weights_of(const BinomialSpec& spec) {
  Weights w;
  w.a = spec.p().get_num();
  const Integer& b = spec.p().get_den();
  w.c = b - w.a;
  mpz_pow_ui(w.total.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(spec.n()));
  return w;
}

// Weights w_lo, ..., w_hi (inclusive) for lo <= hi within [0..n].
std::vector<Integer> weight_range(const BinomialSpec& spec, const Weights& w, long lo, long hi) {
  const unsigned long n = static_cast<unsigned long>(spec.n());
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);

  std::vector<Integer> apow(len);
  mpz_pow_ui(apow[0].get_mpz_t(), w.a.get_mpz_t(), static_cast<unsigned long>(lo));
  for (std::size_t j = 1; j < len; ++j) apow[j] = apow[j - 1] * w.a;

  // cpow[j] = c^(n - (lo + j)), filled from the top index down.
  std::vector<Integer> cpow(len);
  mpz_pow_ui(cpow[len - 1].get_mpz_t(), w.c.get_mpz_t(), n - static_cast<unsigned long>(hi));
  for (std::size_t j = len - 1; j-- > 0;) cpow[j] = cpow[j + 1] * w.c;

  std::vector<Integer> out(len);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, static_cast<unsigned long>(lo));
  for (std::size_t j = 0; j < len; ++j) {
    const unsigned long i = static_cast<unsigned long>(lo) + j;
    out[j] = binom * apow[j] * cpow[j];
    if (j + 1 < len) {
      binom *= (n - i);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
    }
  }
  return out;
}

Integer weight_sum(const BinomialSpec& spec, const Weights& w, long lo, long hi) {
  Integer sum = 0;
  if (lo > hi) return sum;
  for (const auto& x : weight_range(spec, w, lo, hi)) sum += x;
  return sum;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

BinomialSpec::BinomialSpec(long n, Rational p) : n_(n), p_(std::move(p)) {
  p_.canonicalize();
  if (n_ < 1) throw RangeError("binomial: n must be at least 1, got " + std::to_string(n_));
  if (p_ < 0 || p_ > 1) throw RangeError("binomial: p must lie in [0,1], got " + to_fraction_string(p_));
}

BinomialSpec::BinomialSpec(long n, std::string_view p) : BinomialSpec(n, parse_rational(p)) {}

long BinomialSpec::floor_mean() const { return bintail::floor(mean()).get_si(); }

long BinomialSpec::ceil_mean() const { return bintail::ceil(mean()).get_si(); }

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) throw std::logic_error("probability outside [0,1]: " + to_fraction_string(value_));
}

ExactProb pmf(const BinomialSpec& spec, long i) {
  if (i < 0 || i > spec.n()) {
    throw RangeError("pmf: i = " + std::to_string(i) + " outside [0.." + std::to_string(spec.n()) + "]");
  }
  const Weights w = weights_of(spec);
  return ExactProb(ratio(weight_range(spec, w, i, i).front(), w.total));
}

PmfTable pmf_table(const BinomialSpec& spec) {
  const Weights w = weights_of(spec);
  return {weight_range(spec, w, 0, spec.n()), w.total};
}

ExactProb tail_ge(const BinomialSpec& spec, long t, TailOrder order) {
  const long n = spec.n();
  if (t <= 0) return ExactProb(Rational(1));
  if (t > n) return ExactProb(Rational(0));

  if (order == TailOrder::shorter_side) {
    order = (n - t + 1 <= t) ? TailOrder::upper_sum : TailOrder::lower_complement;
  }
  const Weights w = weights_of(spec);
  if (order == TailOrder::upper_sum) {
    return ExactProb(ratio(weight_sum(spec, w, t, n), w.total));
  }
  return ExactProb(ratio(w.total - weight_sum(spec, w, 0, t - 1), w.total));
}

ExactProb cdf(const BinomialSpec& spec, long m, TailOrder order) {
  return ExactProb(1 - tail_ge(spec, m + 1, order).value());
}

ExactProb prob_exceeds_mean(const BinomialSpec& spec) { return tail_ge(spec, spec.floor_mean() + 1); }

ExactProb prob_exceeds_mean_plus_one(const BinomialSpec& spec) { return tail_ge(spec, spec.floor_mean() + 2); }

ExactProb prob_at_least_mean(const BinomialSpec& spec) { return tail_ge(spec, spec.ceil_mean()); }

Median median(const BinomialSpec& spec) {
  const Weights w = weights_of(spec);
  const auto all = weight_range(spec, w, 0, spec.n());
  Integer running = 0;
  for (long m = 0; m <= spec.n(); ++m) {
    running += all[static_cast<std::size_t>(m)];
    const int cmp = ::cmp(2 * running, w.total);
    if (cmp >= 0) return {m, cmp > 0};
  }
  throw std::logic_error("median: cumulative weights do not reach 1/2");
}

long mode(const BinomialSpec& spec) {
  const Weights w = weights_of(spec);
  const auto all = weight_range(spec, w, 0, spec.n());
  long best = 0;
  for (long i = 1; i <= spec.n(); ++i) {
    if (all[static_cast<std::size_t>(i)] > all[static_cast<std::size_t>(best)]) best = i;
  }
  return best;
}

Domination check_domination(long n, const Rational& p_arg, const Rational& q_arg, long t) {
  const Rational p = canonical(p_arg);
  const Rational q = canonical(q_arg);
  if (!(p < q)) {
    throw ArgumentError("domination: requires p < q, got p = " + to_fraction_string(p) + ", q = " +
                        to_fraction_string(q));
  }
  const BinomialSpec lower(n, p);
  const BinomialSpec upper(n, q);
  if (t < 0 || t > n) {
    throw RangeError("domination: t = " + std::to_string(t) + " outside [0.." + std::to_string(n) + "]");
  }
  const int c = ::cmp(tail_ge(lower, t).value(), tail_ge(upper, t).value());
  if (c < 0) return Domination::strict;
  if (c == 0) return Domination::equal;
  return Domination::violated;
}

std::string_view to_string(Domination d) {
  switch (d) {
    case Domination::strict: return "strict";
    case Domination::equal: return "equal";
    case Domination::violated: return "violated";
  }
  return "?";
}

}  // namespace bintail
