#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 the reversed-operand rewrite makes boost 1.74's mixed
// rational/integer operator== call itself forever. Exact overloads win
// overload resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace bstopo {

using Rational = boost::rational<std::int64_t>;

// Parses "3", "-0.125", "1e-3" style decimals and "p/q" fractions exactly.
Rational parse_rational(std::string_view text);

// Terminating decimals are written as decimals, everything else as "p/q".
// parse_rational(format_rational(x)) == x for every x.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

// Shortest decimal that reads back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace bstopo
