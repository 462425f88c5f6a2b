#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ivdg {

/// Exact interval coordinate.
using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3", "p/q" or a finite decimal such as "1.25".
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, otherwise reduced "p/q".
std::string to_string(const Rational& value);

}  // namespace ivdg
