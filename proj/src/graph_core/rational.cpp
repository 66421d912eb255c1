#include "folab/graph_core/rational.hpp"

#include <charconv>

#include "folab/graph_core/errors.hpp"

namespace folab {

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ParseError("invalid integer '" + std::string(text) + "'", offset + 1);
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const auto num = parse_int(text.substr(0, slash), 0);
  const auto den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 2);
  return Rational(num, den);
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

}  // namespace folab
