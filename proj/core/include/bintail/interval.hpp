#pragma once

#include <mpfr.h>

#include "bintail/enclosure.hpp"
#include "bintail/rational.hpp"

namespace bintail {

/// Interval arithmetic over MPFR floats with outward (directed) rounding.
/// Every operation returns an interval containing the exact result of the
/// operation applied to any points of its operands.
class Interval {
 public:
  explicit Interval(int precision_bits);
  Interval(const Rational& value, int precision_bits);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval pi(int precision_bits);

  int precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }
  Enclosure enclosure() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval sqrt(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval log(const Interval& a);
  /// base^exponent for base > 0.
  friend Interval pow(const Interval& base, const Interval& exponent);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace bintail
