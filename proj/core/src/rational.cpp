#include "bintail/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "bintail/errors.hpp"

namespace bintail {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer pow10(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// Places a decimal point `places` digits from the right of |m|.
std::string fixed_from_scaled(const Integer& m, long places) {
  Integer magnitude = abs(m);
  std::string digits = magnitude.get_str();
  if (places > 0) {
    if (static_cast<long>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (sgn(m) < 0 ? "-" : "") + digits;
}

// Returns (m, e) with |m| in [10^(digits-1), 10^digits) and value ~ m * 10^(e - digits + 1).
std::pair<Integer, long> decompose(const Rational& value, int digits, Rounding mode) {
  const long num_len = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 10));
  const long den_len = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 10));
  long e = num_len - den_len;
  const Integer low = pow10(static_cast<unsigned long>(digits - 1));
  const Integer high = pow10(static_cast<unsigned long>(digits));
  for (int guard = 0; guard < 64; ++guard) {
    Integer m = scaled_integer(value, digits - 1 - e, mode);
    Integer magnitude = abs(m);
    if (magnitude >= high) {
      ++e;
    } else if (magnitude < low) {
      --e;
    } else {
      return {m, e};
    }
  }
  throw std::logic_error("decimal decomposition did not converge");
}

std::string strip_fraction_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ArgumentError("empty rational");

  const std::string original(text);
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ArgumentError("malformed rational '" + original + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw ArgumentError("zero denominator in '" + original + "'");
    out = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ArgumentError("malformed decimal '" + original + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    out = Rational(Integer(digits, 10), pow10(frac.size()));
  } else {
    if (!all_digits(text)) throw ArgumentError("malformed rational '" + original + "'");
    out = Rational(Integer(std::string(text), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer scaled_integer(const Rational& value, long scale, Rounding mode) {
  Integer num = value.get_num();
  Integer den = value.get_den();
  if (scale >= 0) {
    num *= pow10(static_cast<unsigned long>(scale));
  } else {
    den *= pow10(static_cast<unsigned long>(-scale));
  }
  Integer out;
  switch (mode) {
    case Rounding::down:
      mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::up:
      mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::toward_zero:
      mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::nearest: {
      Integer twice = 2 * num + den;
      Integer d2 = 2 * den;
      mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
      break;
    }
  }
  return out;
}

std::optional<std::string> exact_decimal(const Rational& value) {
  Integer rest = value.get_den();
  unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(2).get_mpz_t());
  unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(5).get_mpz_t());
  if (rest != 1) return std::nullopt;
  const long places = static_cast<long>(std::max(twos, fives));
  return fixed_from_scaled(scaled_integer(value, places, Rounding::toward_zero), places);
}

std::string truncated_decimal(const Rational& value, int places) {
  Integer m = scaled_integer(value, places, Rounding::toward_zero);
  return fixed_from_scaled(m, places);
}

std::string scientific(const Rational& value, int digits, Rounding mode) {
  if (digits < 1) throw ArgumentError("scientific: digits must be positive");
  if (value == 0) return "0";
  auto [m, e] = decompose(value, digits, mode);
  std::string mantissa = fixed_from_scaled(m, digits - 1);
  std::string exponent = std::to_string(e < 0 ? -e : e);
  if (exponent.size() < 2) exponent.insert(0, "0");
  return mantissa + (e < 0 ? "e-" : "e+") + exponent;
}

std::string significant(const Rational& value, int digits) {
  if (digits < 1) throw ArgumentError("significant: digits must be positive");
  if (value == 0) return "0";
  auto [m, e] = decompose(value, digits, Rounding::nearest);
  if (e >= -5 && e < digits) {
    return strip_fraction_zeros(fixed_from_scaled(m, digits - 1 - e));
  }
  std::string mantissa = strip_fraction_zeros(fixed_from_scaled(m, digits - 1));
  std::string exponent = std::to_string(e < 0 ? -e : e);
  if (exponent.size() < 2) exponent.insert(0, "0");
  return mantissa + (e < 0 ? "e-" : "e+") + exponent;
}

std::string decimal_or_significant(const Rational& value, int fallback_digits) {
  if (auto exact = exact_decimal(value)) return *exact;
  return significant(value, fallback_digits);
}

}  // namespace bintail
