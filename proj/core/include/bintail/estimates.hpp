#pragma once

#include <string_view>
#include <utility>

#include "bintail/enclosure.hpp"
#include "bintail/rational.hpp"

namespace bintail {

/// Stirling-type two-sided bracket for n!:
///   sqrt(2 pi n) (n/e)^n exp(1/(12n+1))  <  n!  <  sqrt(2 pi n) (n/e)^n exp(1/(12n)).
struct FactorialBounds {
  long n = 0;
  Enclosure lower;
  Enclosure upper;
};

/// Refines from `precision_bits` until lower.hi < n! < upper.lo is certified
/// against the exact factorial. Throws IndeterminateError at the precision cap.
FactorialBounds robbins_factorial_bounds(long n, int precision_bits = kDefaultPrecisionBits);

/// The correction-factor bracket exp(1/(12n+1)) and exp(1/(12n)).
std::pair<Enclosure, Enclosure> robbins_correction(long n, int precision_bits = kDefaultPrecisionBits);

/// Two-sided estimate of C(n,k), k in [1..n-1]:
///   C(n,k) = sqrt(n / (2 pi k (n-k))) (n/k)^k (n/(n-k))^(n-k) R,
/// with R bracketed by exp(-1/(12k) - 1/(12(n-k)) + 1/(12n+1)) and
/// exp(-1/(12k+1) - 1/(12(n-k)+1) + 1/(12n)). Refines until
/// lower.hi < C(n,k) < upper.lo.
struct BinomialCoefficientBounds {
  Enclosure lower;
  Enclosure upper;
};
BinomialCoefficientBounds binom_coeff_enclosure(long n, long k, int precision_bits = kDefaultPrecisionBits);

/// exp(-1/6 + 1/25), the uniform lower bound on the correction factor above.
Enclosure binom_correction_floor(int precision_bits = kDefaultPrecisionBits);

/// sqrt(n / (2 pi k (n-k))), an upper bound on Pr[Bin(n, k/n) = k].
Enclosure pmf_upper_bound(long n, long k, int precision_bits = kDefaultPrecisionBits);

/// (1 - 1/x)^(x + shift) for rational x >= 1 with x + shift >= 0, honoring
/// 0^0 = 1. Integer exponents are evaluated exactly.
Enclosure one_minus_reciprocal_pow(const Rational& x, const Rational& shift,
                                   int precision_bits = kDefaultPrecisionBits);

/// (1 + 1/x)^(x + shift) for rational x > 0 with x + shift >= 0.
Enclosure one_plus_reciprocal_pow(const Rational& x, const Rational& shift,
                                  int precision_bits = kDefaultPrecisionBits);

enum class MonoKind {
  pow_inc,   ///< (1 - 1/x)^(x - 1/2 + alpha), increasing for x >= 1
  pow_dec,   ///< (1 + 1/x)^(x + 1/2 + alpha), decreasing for x > 0
  pair_sum,  ///< (1 - 1/x)^x + (1 - 1/x)^(x - 1), decreasing for x >= 1
};

std::string_view to_string(MonoKind kind);

/// Evaluates one of the three monotone expressions. Throws RangeError when
/// x or alpha lies outside the expression's domain; alpha is ignored for
/// pair_sum.
Enclosure mono_expr(MonoKind kind, const Rational& x, const Rational& alpha,
                    int precision_bits = kDefaultPrecisionBits);

}  // namespace bintail
