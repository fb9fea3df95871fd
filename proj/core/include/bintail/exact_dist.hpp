#pragma once

#include <string_view>
#include <vector>

#include "bintail/rational.hpp"

namespace bintail {

/// Bin(n, p) with an exact rational success probability.
class BinomialSpec {
 public:
  /// Throws RangeError unless n >= 1 and 0 <= p <= 1.
  BinomialSpec(long n, Rational p);
  /// `p` is "a/b" or a finite decimal.
  BinomialSpec(long n, std::string_view p);

  long n() const { return n_; }
  const Rational& p() const { return p_; }
  Rational mean() const { return p_ * n_; }
  /// floor(n p), computed exactly.
  long floor_mean() const;
  /// ceil(n p), computed exactly.
  long ceil_mean() const;

 private:
  long n_;
  Rational p_;
};

/// An exact probability in [0, 1].
class ExactProb {
 public:
  explicit ExactProb(Rational value);
  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

/// Pr[X = i]; throws RangeError for i outside [0..n]. Uses 0^0 = 1.
ExactProb pmf(const BinomialSpec& spec, long i);

/// Pr[X = i] = weights[i] / denominator for i in [0..n], with
/// denominator = b^n for p = a/b in lowest terms. Not reduced.
struct PmfTable {
  std::vector<Integer> weights;
  Integer denominator;
};

PmfTable pmf_table(const BinomialSpec& spec);

enum class TailOrder {
  shorter_side,      ///< sum whichever side has fewer terms, complement if needed
  upper_sum,         ///< sum i = t..n directly
  lower_complement,  ///< 1 - sum i = 0..t-1
};

/// Pr[X >= t] for any integer t (1 when t <= 0, 0 when t > n).
ExactProb tail_ge(const BinomialSpec& spec, long t, TailOrder order = TailOrder::shorter_side);

/// Pr[X <= m] for any integer m.
ExactProb cdf(const BinomialSpec& spec, long m, TailOrder order = TailOrder::shorter_side);

/// Pr[X > np] = Pr[X >= floor(np) + 1].
ExactProb prob_exceeds_mean(const BinomialSpec& spec);

/// Pr[X > np + 1] = Pr[X >= floor(np) + 2].
ExactProb prob_exceeds_mean_plus_one(const BinomialSpec& spec);

/// Pr[X >= np] = Pr[X >= ceil(np)].
ExactProb prob_at_least_mean(const BinomialSpec& spec);

struct Median {
  long value;
  /// Whether `value` is the only median, i.e. Pr[X <= value] > 1/2.
  bool unique;
};

/// Smallest m with Pr[X <= m] >= 1/2.
Median median(const BinomialSpec& spec);

/// Smallest index of a maximal pmf value.
long mode(const BinomialSpec& spec);

enum class Domination { strict, equal, violated };

/// Compares Pr[Bin(n,p) >= t] with Pr[Bin(n,q) >= t].
/// Requires 0 <= p < q <= 1 (ArgumentError otherwise) and t in [0..n]
/// (RangeError otherwise).
Domination check_domination(long n, const Rational& p, const Rational& q, long t);

std::string_view to_string(Domination d);

}  // namespace bintail
