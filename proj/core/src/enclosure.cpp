#include "bintail/enclosure.hpp"

namespace bintail {

Placement place(const Enclosure& value, const Rational& target) {
  if (value.hi < target) return Placement::below;
  if (value.lo > target) return Placement::above;
  if (value.lo == target && value.hi == target) return Placement::equal;
  return Placement::straddles;
}

std::string lower_text(const Enclosure& e, int digits) {
  return scientific(e.lo, digits, Rounding::down);
}

std::string upper_text(const Enclosure& e, int digits) {
  return scientific(e.hi, digits, Rounding::up);
}

}  // namespace bintail
