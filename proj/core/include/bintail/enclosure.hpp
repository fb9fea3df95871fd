#pragma once

#include <stdexcept>
#include <string>

#include "bintail/rational.hpp"

namespace bintail {

inline constexpr int kDefaultPrecisionBits = 128;
inline constexpr int kMaxPrecisionBits = 1024;

/// A closed interval [lo, hi] certified to contain a real value.
///
/// Endpoints produced by the interval engine are dyadic rationals. Values that
/// are exactly rational (integer powers of rationals, constants such as 1/4)
/// are carried as degenerate enclosures with lo == hi, which is how the exact
/// fast path shows up downstream.
struct Enclosure {
  Rational lo;
  Rational hi;
  int precision_bits = 0;

  static Enclosure exact(const Rational& value) { return {value, value, 0}; }

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& value) const { return lo <= value && value <= hi; }
  bool nested_in(const Enclosure& outer) const { return outer.lo <= lo && hi <= outer.hi; }
};

/// Relation between an enclosed real and an exact rational.
enum class Placement {
  below,     ///< hi < target
  above,     ///< lo > target
  equal,     ///< lo == hi == target
  straddles  ///< undecided at this precision
};

Placement place(const Enclosure& value, const Rational& target);

/// Thrown when refinement reaches kMaxPrecisionBits without deciding a
/// comparison. Carries the last enclosure computed.
class IndeterminateError : public std::runtime_error {
 public:
  IndeterminateError(const std::string& what, Enclosure last)
      : std::runtime_error(what), last_(std::move(last)) {}
  const Enclosure& last() const { return last_; }

 private:
  Enclosure last_;
};

/// Precision ladder: start, 2*start, ... capped at kMaxPrecisionBits.
/// `attempt(bits)` returns true once it has decided; returns the deciding
/// precision or 0 when the ladder is exhausted.
template <class Attempt>
int refine(int start_bits, Attempt&& attempt) {
  int bits = start_bits < 16 ? 16 : start_bits;
  while (true) {
    if (attempt(bits)) return bits;
    if (bits >= kMaxPrecisionBits) return 0;
    bits = bits * 2 > kMaxPrecisionBits ? kMaxPrecisionBits : bits * 2;
  }
}

/// Directed-rounded text for serialization: lo rounded down, hi rounded up.
std::string lower_text(const Enclosure& e, int digits = 30);
std::string upper_text(const Enclosure& e, int digits = 30);

}  // namespace bintail
