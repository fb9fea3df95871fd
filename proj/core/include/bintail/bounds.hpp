#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bintail/enclosure.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/rational.hpp"

namespace bintail {

/// Stable identifiers; to_string yields the CLI spelling.
enum class BoundId {
  rt11,             ///< "rt11": Rigollet-Tong, strengthened form
  gm14,             ///< "gm14": Greenberg-Mohri constant 1/4
  pr16,             ///< "pr16": Pelekis-Ramon
  doerr_g,          ///< "doerr-g": 1/2 - sqrt(n / (2 pi k (n-k)))
  quarter,          ///< "quarter": 1/4 for p >= ln(4/3)/n
  small_p,          ///< "small-p": constant for every p > 0
  plusone_a,        ///< "plusone-a"
  plusone_b,        ///< "plusone-b": h(n,k)
  plusone_c,        ///< "plusone-c": 0.0370
  plusone_small_p,  ///< "plusone-small-p"
  pelekis_k,        ///< "pelekis-k": Pr[X >= t] for t > np
};

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view text);
const std::vector<BoundId>& all_bound_ids();

/// The event a bound speaks about.
enum class Event {
  ge_mean,            ///< X >= np
  gt_mean,            ///< X > np
  gt_mean_plus_one,   ///< X > np + 1
  ge_t,               ///< X >= t
};

std::string_view to_string(Event event);

struct BoundValue {
  BoundId id;
  Enclosure value;
  /// Inputs satisfy the bound's stated hypothesis.
  bool valid = false;
  /// The bound is claimed with strict inequality.
  bool strict = false;
  Event event = Event::gt_mean;
  /// The exact probability is known to meet the bound with equality here.
  bool equality_expected = false;
  /// Threshold t for Event::ge_t.
  long threshold = 0;
};

/// The exact probability a bound value is to be compared with.
ExactProb exact_target(const BinomialSpec& spec, Event event, long t = 0);

enum class PlusOneVariant { a, b, c };

/// 1/4 on p in [1/n, 1/2], p below 1/n; flagged invalid above 1/2.
/// Throws RangeError for p <= 0.
BoundValue bound_rigollet_tong(long n, const Rational& p);

/// Constant 1/4, strict, valid for 1/n < p <= 1.
BoundValue bound_greenberg_mohri(long n, const Rational& p);

/// (1/(2 sqrt 2)) sqrt(v) / (sqrt(v+1) + 1) with v = np(1-p); valid for
/// 1/n <= p <= 1 - 1/n.
BoundValue bound_pelekis_ramon(long n, const Rational& p, int precision_bits = kDefaultPrecisionBits);

/// g(n,k) = 1/2 - sqrt(n / (2 pi k (n-k))) for k in [1..n-1].
BoundValue bound_g(long n, long k, int precision_bits = kDefaultPrecisionBits);

/// g(n, floor(np)); valid for 1/n <= p < 1. Throws RangeError when
/// floor(np) is outside [1..n-1].
BoundValue bound_g_at(long n, const Rational& p, int precision_bits = kDefaultPrecisionBits);

/// Decides p * n >= ln(4/3) exactly. Throws IndeterminateError if the
/// precision cap is reached (cannot happen for rational p).
bool at_least_log_four_thirds(const Rational& pn, int precision_bits = kDefaultPrecisionBits);

/// Constant 1/4, valid iff ln(4/3)/n <= p < 1.
BoundValue bound_quarter(long n, const Rational& p, int precision_bits = kDefaultPrecisionBits);

/// 1 - exp(-pn) for p < 1/n; 0.0113 (n >= 3) or 1/4 (n = 2) for p >= 1/n.
/// Throws RangeError unless 0 < p < 1.
BoundValue bound_small_p(long n, const Rational& p, int precision_bits = kDefaultPrecisionBits);

/// Lower bounds on Pr[X > np + 1] for n >= 3, k = floor(np) in [1..n-2].
BoundValue bound_plusone(long n, long k, PlusOneVariant variant, int precision_bits = kDefaultPrecisionBits);

/// As bound_plusone with k = floor(np); valid for 1/n <= p < 1 - 1/n.
BoundValue bound_plusone_at(long n, const Rational& p, PlusOneVariant variant,
                            int precision_bits = kDefaultPrecisionBits);

/// 1 - e^(-alpha) - alpha e^(-alpha (n-1)/n) for p = alpha/n, alpha in (0,1).
BoundValue bound_plusone_small_p(long n, const Rational& alpha, int precision_bits = kDefaultPrecisionBits);

/// floor((t - np) / (1 - p)).
long pelekis_ell(long n, const Rational& p, long t);

/// p^(2l+2)/2 * C(n,l+1) / C(t,l+1) with l = pelekis_ell; exact.
/// Requires 0 < p < 1 and np < t <= n-1.
BoundValue bound_pelekis_k(long n, const Rational& p, long t);

enum class ShiftVerdict { holds, violated };

/// Pr[Bin(n,k/n) >= k+1] >= Pr[Bin(n,(k-1)/n) >= k], for 2 <= k <= n-1.
ShiftVerdict rigollet_shift_check(long n, long k);

/// Arguments for registry-driven evaluation (CLI, sweeps).
struct BoundQuery {
  BoundId id = BoundId::doerr_g;
  long n = 0;
  std::optional<Rational> p;
  std::optional<long> k;
  std::optional<long> t;
  std::optional<PlusOneVariant> variant;
};

/// Dispatches a query. Missing or conflicting arguments throw ArgumentError;
/// domain violations throw RangeError.
BoundValue evaluate(const BoundQuery& query, int precision_bits = kDefaultPrecisionBits);

}  // namespace bintail
