#pragma once

#include <stdexcept>
#include <string>

namespace bintail {

/// An argument lies outside the domain an operation is defined on.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed or inconsistent arguments (bad rational text, p >= q, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bintail
