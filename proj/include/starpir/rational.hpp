#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace starpir {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms; integers print as "p/1".
std::string to_fraction(const Rational& r);
/// Fixed-point decimal with `digits` places, rounded half up.
std::string to_decimal(const Rational& r, int digits = 10);

}  // namespace starpir
