#include "bintail/interval.hpp"

#include <algorithm>
#include <utility>

#include "bintail/errors.hpp"

namespace bintail {
namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

// r.lo/r.hi from the four corner values of a monotone-in-each-argument op.
template <class Op>
void corners(mpfr_t lo, mpfr_t hi, const mpfr_t a_lo, const mpfr_t a_hi, const mpfr_t b_lo,
             const mpfr_t b_hi, Op op) {
  const mpfr_prec_t prec = mpfr_get_prec(lo);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a_lo, a_hi};
  const mpfr_srcptr bs[2] = {b_lo, b_hi};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

}  // namespace

Interval::Interval(int precision_bits) {
  mpfr_init2(lo_, precision_bits);
  mpfr_init2(hi_, precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value, int precision_bits) : Interval(precision_bits) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(int precision_bits) {
  Interval out(precision_bits);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Enclosure Interval::enclosure() const {
  if (!mpfr_number_p(lo_) || !mpfr_number_p(hi_)) {
    throw RangeError("interval endpoint is not a finite number");
  }
  Enclosure out;
  mpfr_get_q(out.lo.get_mpq_t(), lo_);
  mpfr_get_q(out.hi.get_mpq_t(), hi_);
  out.precision_bits = precision();
  return out;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  corners(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_mul);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw RangeError("interval division by an interval containing zero");
  }
  Interval out(joint_precision(a, b));
  corners(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_div);
  return out;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw RangeError("interval sqrt of a possibly negative value");
  Interval out(a.precision());
  mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& a) {
  Interval out(a.precision());
  mpfr_exp(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw RangeError("interval log of a possibly non-positive value");
  Interval out(a.precision());
  mpfr_log(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& base, const Interval& exponent) {
  return exp(exponent * log(base));
}

}  // namespace bintail
