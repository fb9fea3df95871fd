#include "bintail/estimates.hpp"

#include <algorithm>
#include <string>

#include "bintail/errors.hpp"
#include "bintail/interval.hpp"

namespace bintail {
namespace {

Rational exact_pow(const Rational& base, const Integer& exponent) {
  const unsigned long e = exponent.get_ui();
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// base^exponent for base >= 0, exponent >= 0, with 0^0 = 1.
Enclosure rational_pow(const Rational& base, const Rational& exponent, int bits) {
  if (exponent.get_den() == 1) return Enclosure::exact(exact_pow(base, exponent.get_num()));
  if (base == 0) return Enclosure::exact(Rational(0));
  return pow(Interval(base, bits), Interval(exponent, bits)).enclosure();
}

Enclosure add(const Enclosure& a, const Enclosure& b) {
  return {a.lo + b.lo, a.hi + b.hi, std::max(a.precision_bits, b.precision_bits)};
}

// sqrt(ratio / (2 pi)) as an interval.
Interval sqrt_over_two_pi(const Rational& ratio, int bits) {
  return sqrt(Interval(ratio, bits) / (Interval(Rational(2), bits) * Interval::pi(bits)));
}

void require_inner_index(const char* op, long n, long k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw RangeError(std::string(op) + ": requires 1 <= k <= n-1, got n = " + std::to_string(n) +
                     ", k = " + std::to_string(k));
  }
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

std::pair<Enclosure, Enclosure> robbins_correction(long n, int precision_bits) {
  if (n < 1) throw RangeError("robbins: n must be at least 1");
  return {exp(Interval(Rational(1, 12 * n + 1), precision_bits)).enclosure(),
          exp(Interval(Rational(1, 12 * n), precision_bits)).enclosure()};
}

FactorialBounds robbins_factorial_bounds(long n, int precision_bits) {
  if (n < 1) throw RangeError("robbins: n must be at least 1, got " + std::to_string(n));
  const Rational exact(factorial(n));
  FactorialBounds out{n, {}, {}};
  const int used = refine(precision_bits, [&](int bits) {
    const Interval nn(Rational(n), bits);
    const Interval stirling =
        sqrt(Interval(Rational(2), bits) * Interval::pi(bits) * nn) * exp(nn * log(nn) - nn);
    out.lower = (stirling * exp(Interval(Rational(1, 12 * n + 1), bits))).enclosure();
    out.upper = (stirling * exp(Interval(Rational(1, 12 * n), bits))).enclosure();
    return out.lower.hi < exact && exact < out.upper.lo;
  });
  if (used == 0) {
    throw IndeterminateError("robbins: cannot separate bounds from n! for n = " + std::to_string(n), out.lower);
  }
  return out;
}

BinomialCoefficientBounds binom_coeff_enclosure(long n, long k, int precision_bits) {
  require_inner_index("binom_coeff_enclosure", n, k);
  const long m = n - k;
  const Rational exact(binomial(n, k));
  // (n/k)^k (n/(n-k))^(n-k), exact.
  Integer nn, kk, mm;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
  mpz_ui_pow_ui(mm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));
  Rational powers(nn, kk * mm);
  powers.canonicalize();
  const Rational low_arg = -Rational(1, 12 * k) - Rational(1, 12 * m) + Rational(1, 12 * n + 1);
  const Rational high_arg = -Rational(1, 12 * k + 1) - Rational(1, 12 * m + 1) + Rational(1, 12 * n);
  Rational shape(n, k * m);
  shape.canonicalize();

  BinomialCoefficientBounds out;
  const int used = refine(precision_bits, [&](int bits) {
    const Interval base = sqrt_over_two_pi(shape, bits) * Interval(powers, bits);
    out.lower = (base * exp(Interval(low_arg, bits))).enclosure();
    out.upper = (base * exp(Interval(high_arg, bits))).enclosure();
    return out.lower.hi < exact && exact < out.upper.lo;
  });
  if (used == 0) {
    throw IndeterminateError("binom_coeff_enclosure: cannot separate bounds from C(" + std::to_string(n) + "," +
                                 std::to_string(k) + ")",
                             out.lower);
  }
  return out;
}

Enclosure binom_correction_floor(int precision_bits) {
  return exp(Interval(Rational(-1, 6) + Rational(1, 25), precision_bits)).enclosure();
}

Enclosure pmf_upper_bound(long n, long k, int precision_bits) {
  require_inner_index("pmf_upper_bound", n, k);
  Rational shape(n, k * (n - k));
  shape.canonicalize();
  return sqrt_over_two_pi(shape, precision_bits).enclosure();
}

Enclosure one_minus_reciprocal_pow(const Rational& x_arg, const Rational& shift_arg, int precision_bits) {
  const Rational x = canonical(x_arg);
  const Rational shift = canonical(shift_arg);
  if (x < 1) throw RangeError("(1-1/x)^(x+s): requires x >= 1, got x = " + to_fraction_string(x));
  const Rational exponent = x + shift;
  if (exponent < 0) throw RangeError("(1-1/x)^(x+s): negative exponent " + to_fraction_string(exponent));
  return rational_pow(1 - 1 / x, exponent, precision_bits);
}

Enclosure one_plus_reciprocal_pow(const Rational& x_arg, const Rational& shift_arg, int precision_bits) {
  const Rational x = canonical(x_arg);
  const Rational shift = canonical(shift_arg);
  if (x <= 0) throw RangeError("(1+1/x)^(x+s): requires x > 0, got x = " + to_fraction_string(x));
  const Rational exponent = x + shift;
  if (exponent < 0) throw RangeError("(1+1/x)^(x+s): negative exponent " + to_fraction_string(exponent));
  return rational_pow(1 + 1 / x, exponent, precision_bits);
}

std::string_view to_string(MonoKind kind) {
  switch (kind) {
    case MonoKind::pow_inc: return "pow_inc";
    case MonoKind::pow_dec: return "pow_dec";
    case MonoKind::pair_sum: return "pair_sum";
  }
  return "?";
}

Enclosure mono_expr(MonoKind kind, const Rational& x_arg, const Rational& alpha_arg, int precision_bits) {
  const Rational x = canonical(x_arg);
  const Rational alpha = canonical(alpha_arg);
  const Rational half(1, 2);
  switch (kind) {
    case MonoKind::pow_inc:
      if (alpha < 0) throw RangeError("pow_inc: alpha must be non-negative");
      return one_minus_reciprocal_pow(x, alpha - half, precision_bits);
    case MonoKind::pow_dec:
      if (alpha < 0) throw RangeError("pow_dec: alpha must be non-negative");
      return one_plus_reciprocal_pow(x, alpha + half, precision_bits);
    case MonoKind::pair_sum:
      if (x < 1) throw RangeError("pair_sum: requires x >= 1, got x = " + to_fraction_string(x));
      return add(one_minus_reciprocal_pow(x, Rational(0), precision_bits),
                 one_minus_reciprocal_pow(x, Rational(-1), precision_bits));
  }
  throw std::logic_error("mono_expr: unknown kind");
}

}  // namespace bintail
