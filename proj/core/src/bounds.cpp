#include "bintail/bounds.hpp"

#include <array>
#include <string>

#include "bintail/errors.hpp"
#include "bintail/interval.hpp"

namespace bintail {
namespace {

struct IdName {
  BoundId id;
  std::string_view name;
};

constexpr std::array<IdName, 11> kIds{{
    {BoundId::rt11, "rt11"},
    {BoundId::gm14, "gm14"},
    {BoundId::pr16, "pr16"},
    {BoundId::doerr_g, "doerr-g"},
    {BoundId::quarter, "quarter"},
    {BoundId::small_p, "small-p"},
    {BoundId::plusone_a, "plusone-a"},
    {BoundId::plusone_b, "plusone-b"},
    {BoundId::plusone_c, "plusone-c"},
    {BoundId::plusone_small_p, "plusone-small-p"},
    {BoundId::pelekis_k, "pelekis-k"},
}};

std::string describe(long n, const Rational& p) {
  return "n = " + std::to_string(n) + ", p = " + to_fraction_string(p);
}

void require_n(long n) {
  if (n < 1) throw RangeError("n must be at least 1, got " + std::to_string(n));
}

void require_unit(long n, const Rational& p) {
  require_n(n);
  if (p < 0 || p > 1) throw RangeError("p must lie in [0,1]: " + describe(n, p));
}

Interval sqrt_over_two_pi(const Rational& ratio, int bits) {
  return sqrt(Interval(ratio, bits) / (Interval(Rational(2), bits) * Interval::pi(bits)));
}

Rational exact_pow(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& entry : kIds) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view text) {
  for (const auto& entry : kIds) {
    if (entry.name == text) return entry.id;
  }
  return std::nullopt;
}

const std::vector<BoundId>& all_bound_ids() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> out;
    for (const auto& entry : kIds) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(Event event) {
  switch (event) {
    case Event::ge_mean: return "ge_mean";
    case Event::gt_mean: return "gt_mean";
    case Event::gt_mean_plus_one: return "gt_mean_plus_one";
    case Event::ge_t: return "ge_t";
  }
  return "?";
}

ExactProb exact_target(const BinomialSpec& spec, Event event, long t) {
  switch (event) {
    case Event::ge_mean: return prob_at_least_mean(spec);
    case Event::gt_mean: return prob_exceeds_mean(spec);
    case Event::gt_mean_plus_one: return prob_exceeds_mean_plus_one(spec);
    case Event::ge_t: return tail_ge(spec, t);
  }
  throw std::logic_error("exact_target: unknown event");
}

BoundValue bound_rigollet_tong(long n, const Rational& p_arg) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  if (p <= 0) throw RangeError("rt11: requires p > 0: " + describe(n, p));
  BoundValue out{BoundId::rt11, {}, p <= q(1, 2), false, Event::ge_mean};
  out.value = Enclosure::exact(p * n < 1 ? p : q(1, 4));
  return out;
}

BoundValue bound_greenberg_mohri(long n, const Rational& p_arg) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  return {BoundId::gm14, Enclosure::exact(q(1, 4)), p * n > 1, true, Event::ge_mean};
}

BoundValue bound_pelekis_ramon(long n, const Rational& p_arg, int precision_bits) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  const Rational variance = p * (1 - p) * n;
  const Interval v(variance, precision_bits);
  const Interval one(Rational(1), precision_bits);
  const Interval value =
      sqrt(v) / ((sqrt(v + one) + one) * Interval(Rational(2), precision_bits) *
                 sqrt(Interval(Rational(2), precision_bits)));
  const bool valid = p * n >= 1 && (1 - p) * n >= 1;
  return {BoundId::pr16, value.enclosure(), valid, false, Event::ge_mean};
}

BoundValue bound_g(long n, long k, int precision_bits) {
  require_n(n);
  if (k < 1 || k > n - 1) {
    throw RangeError("doerr-g: requires 1 <= k <= n-1, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  const Interval value = Interval(q(1, 2), precision_bits) - sqrt_over_two_pi(q(n, k * (n - k)), precision_bits);
  return {BoundId::doerr_g, value.enclosure(), true, true, Event::gt_mean};
}

BoundValue bound_g_at(long n, const Rational& p_arg, int precision_bits) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  const long k = floor(p * n).get_si();
  if (k < 1 || k > n - 1) throw RangeError("doerr-g: requires 1/n <= p < 1: " + describe(n, p));
  return bound_g(n, k, precision_bits);
}

bool at_least_log_four_thirds(const Rational& pn_arg, int precision_bits) {
  const Rational pn = canonical(pn_arg);
  bool answer = false;
  Enclosure last;
  const int used = refine(precision_bits, [&](int bits) {
    last = log(Interval(q(4, 3), bits)).enclosure();
    switch (place(last, pn)) {
      case Placement::below: answer = true; return true;
      case Placement::above: answer = false; return true;
      default: return false;
    }
  });
  if (used == 0) throw IndeterminateError("cannot compare " + to_fraction_string(pn) + " with ln(4/3)", last);
  return answer;
}

BoundValue bound_quarter(long n, const Rational& p_arg, int precision_bits) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  const bool valid = p < 1 && at_least_log_four_thirds(p * n, precision_bits);
  BoundValue out{BoundId::quarter, Enclosure::exact(q(1, 4)), valid, false, Event::gt_mean};
  out.equality_expected = n == 2 && p == q(1, 2);
  return out;
}

BoundValue bound_small_p(long n, const Rational& p_arg, int precision_bits) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  if (p <= 0 || p >= 1) throw RangeError("small-p: requires 0 < p < 1: " + describe(n, p));
  const Rational pn = p * n;
  if (pn < 1) {
    const Interval one(Rational(1), precision_bits);
    const Interval value = one - exp(-Interval(pn, precision_bits));
    return {BoundId::small_p, value.enclosure(), true, true, Event::gt_mean};
  }
  if (n >= 3) return {BoundId::small_p, Enclosure::exact(q(113, 10000)), true, true, Event::gt_mean};
  // n = 2 and p >= 1/2: Pr[X > np] >= Pr[X = 2] = p^2 >= 1/4.
  BoundValue out{BoundId::small_p, Enclosure::exact(q(1, 4)), true, false, Event::gt_mean};
  out.equality_expected = p == q(1, 2);
  return out;
}

BoundValue bound_plusone(long n, long k, PlusOneVariant variant, int precision_bits) {
  if (n < 3 || k < 1 || k > n - 2) {
    throw RangeError("plusone: requires n >= 3 and 1 <= k <= n-2, got n = " + std::to_string(n) +
                     ", k = " + std::to_string(k));
  }
  const int bits = precision_bits;
  switch (variant) {
    case PlusOneVariant::a: {
      const Interval value =
          Interval(q(1, 2), bits) - Interval(Rational(2), bits) * sqrt_over_two_pi(q(n, k * (n - k)), bits);
      return {BoundId::plusone_a, value.enclosure(), true, false, Event::gt_mean_plus_one};
    }
    case PlusOneVariant::b: {
      const long up = k + 1;
      const long down = n - k - 1;
      const Rational shrink = exact_pow(q(k, up), static_cast<unsigned long>(up));
      const Rational grow = exact_pow(q(n - k, down), static_cast<unsigned long>(down));
      const Interval value = Interval(q(1, 4), bits) - sqrt_over_two_pi(q(n, up * down), bits) *
                                                           Interval(shrink * grow, bits);
      return {BoundId::plusone_b, value.enclosure(), true, false, Event::gt_mean_plus_one};
    }
    case PlusOneVariant::c:
      return {BoundId::plusone_c, Enclosure::exact(q(37, 1000)), true, false, Event::gt_mean_plus_one};
  }
  throw std::logic_error("plusone: unknown variant");
}

BoundValue bound_plusone_at(long n, const Rational& p_arg, PlusOneVariant variant, int precision_bits) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  const long k = floor(p * n).get_si();
  if (n < 3 || k < 1 || k > n - 2) {
    throw RangeError("plusone: requires n >= 3 and 1/n <= p < 1 - 1/n: " + describe(n, p));
  }
  return bound_plusone(n, k, variant, precision_bits);
}

BoundValue bound_plusone_small_p(long n, const Rational& alpha_arg, int precision_bits) {
  const Rational alpha = canonical(alpha_arg);
  require_n(n);
  if (alpha <= 0 || alpha >= 1) {
    throw RangeError("plusone-small-p: requires 0 < alpha = np < 1, got alpha = " + to_fraction_string(alpha));
  }
  const Interval one(Rational(1), precision_bits);
  const Interval a(alpha, precision_bits);
  const Interval value = one - exp(-a) - a * exp(-Interval(alpha * q(n - 1, n), precision_bits));
  return {BoundId::plusone_small_p, value.enclosure(), true, false, Event::gt_mean_plus_one};
}

long pelekis_ell(long n, const Rational& p_arg, long t) {
  const Rational p = canonical(p_arg);
  return floor((t - p * n) / (1 - p)).get_si();
}

BoundValue bound_pelekis_k(long n, const Rational& p_arg, long t) {
  const Rational p = canonical(p_arg);
  require_unit(n, p);
  if (p <= 0 || p >= 1) throw RangeError("pelekis-k: requires 0 < p < 1: " + describe(n, p));
  if (!(p * n < t) || t > n - 1) {
    throw RangeError("pelekis-k: requires np < t <= n-1: " + describe(n, p) + ", t = " + std::to_string(t));
  }
  const long ell = pelekis_ell(n, p, t);
  Rational value = exact_pow(p, static_cast<unsigned long>(2 * ell + 2)) / 2;
  value *= Rational(binomial(n, ell + 1), binomial(t, ell + 1));
  value.canonicalize();
  BoundValue out{BoundId::pelekis_k, Enclosure::exact(value), true, false, Event::ge_t};
  out.threshold = t;
  return out;
}

ShiftVerdict rigollet_shift_check(long n, long k) {
  if (k < 2 || k > n - 1) {
    throw RangeError("shift check: requires 2 <= k <= n-1, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  const auto left = tail_ge(BinomialSpec(n, q(k, n)), k + 1);
  const auto right = tail_ge(BinomialSpec(n, q(k - 1, n)), k);
  return left.value() >= right.value() ? ShiftVerdict::holds : ShiftVerdict::violated;
}

BoundValue evaluate(const BoundQuery& query, int precision_bits) {
  const long n = query.n;
  const auto k_or_p = [&] {
    if (query.k && query.p) throw ArgumentError(std::string(to_string(query.id)) + " takes --k or --p, not both");
    if (!query.k && !query.p) throw ArgumentError(std::string(to_string(query.id)) + " requires --k or --p");
  };
  // p-based bounds also accept a lattice index, read as p = k/n
  const auto need_p = [&]() -> Rational {
    k_or_p();
    if (query.p) return *query.p;
    require_n(n);
    return canonical(Rational(*query.k, n));
  };
  const auto plusone = [&](PlusOneVariant variant) {
    if (query.variant && *query.variant != variant) {
      throw ArgumentError("--variant conflicts with bound " + std::string(to_string(query.id)));
    }
    k_or_p();
    return query.k ? bound_plusone(n, *query.k, variant, precision_bits)
                   : bound_plusone_at(n, *query.p, variant, precision_bits);
  };

  switch (query.id) {
    case BoundId::rt11: return bound_rigollet_tong(n, need_p());
    case BoundId::gm14: return bound_greenberg_mohri(n, need_p());
    case BoundId::pr16: return bound_pelekis_ramon(n, need_p(), precision_bits);
    case BoundId::doerr_g:
      k_or_p();
      return query.k ? bound_g(n, *query.k, precision_bits) : bound_g_at(n, *query.p, precision_bits);
    case BoundId::quarter: return bound_quarter(n, need_p(), precision_bits);
    case BoundId::small_p: return bound_small_p(n, need_p(), precision_bits);
    case BoundId::plusone_a: return plusone(PlusOneVariant::a);
    case BoundId::plusone_b: return plusone(PlusOneVariant::b);
    case BoundId::plusone_c: return plusone(PlusOneVariant::c);
    case BoundId::plusone_small_p: {
      require_n(n);
      return bound_plusone_small_p(n, need_p() * n, precision_bits);
    }
    case BoundId::pelekis_k: {
      const Rational p = need_p();
      if (!query.t) throw ArgumentError("pelekis-k requires --t");
      return bound_pelekis_k(n, p, *query.t);
    }
  }
  throw std::logic_error("evaluate: unknown bound id");
}

}  // namespace bintail
