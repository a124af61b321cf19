#include "bstopo/core/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "bstopo/core/error.hpp"

namespace bstopo {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

std::int64_t checked_pow10(int exponent, std::string_view whole) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / 10) {
      throw ParseError("too many digits for an exact rational: '" + std::string(whole) + "'");
    }
    out *= 10;
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_int(text.substr(e + 1), whole));
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
  }
  if (digits.empty()) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  std::int64_t mantissa = parse_int(digits, whole);
  if (negative) mantissa = -mantissa;

  const int scale = exponent - frac_digits;
  if (scale >= 0) {
    const auto factor = checked_pow10(scale, whole);
    if (mantissa != 0 && std::abs(mantissa) > std::numeric_limits<std::int64_t>::max() / factor) {
      throw ParseError("rational out of range: '" + std::string(whole) + "'");
    }
    return Rational(mantissa * factor);
  }
  return Rational(mantissa, checked_pow10(-scale, whole));
}

std::string format_rational(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
  }
  if (value.denominator() == 1) return std::to_string(value.numerator());

  // Scale to a power-of-ten denominator.
  const int places = std::max(twos, fives);
  __int128 scaled = value.numerator();
  for (int i = 0; i < places - twos; ++i) scaled *= 2;
  for (int i = 0; i < places - fives; ++i) scaled *= 5;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits;
  while (scaled > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  digits.insert(digits.end() - places, '.');
  return negative ? "-" + digits : digits;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

double parse_double(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const char* begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a decimal number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace bstopo
