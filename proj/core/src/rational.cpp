#include "ivdg/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>

namespace ivdg {
namespace {

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_integer(text.substr(0, slash));
    std::int64_t den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != frac.npos ||
        whole.find_first_not_of("0123456789") != whole.npos) {
      throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = whole.empty() ? 0 : parse_integer(whole);
    std::int64_t f = parse_integer(frac);
    if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) {
      throw std::invalid_argument("decimal out of range: '" + std::string(text) + "'");
    }
    Rational value(w * scale + f, scale);
    return negative ? -value : value;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace ivdg
