#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace folab {

using Rational = boost::rational<std::int64_t>;

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "a", "-a" or "a/b". Throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace folab
