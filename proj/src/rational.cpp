#include "starpir/rational.hpp"

#include <cstdlib>

namespace starpir {

std::string to_fraction(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational& r, int digits) {
  const bool negative = r.numerator() < 0;
  const __int128 num = negative ? -static_cast<__int128>(r.numerator()) : r.numerator();
  const __int128 den = r.denominator();
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const __int128 scaled = (num * scale * 2 + den) / (den * 2);
  const __int128 whole = scaled / scale;
  __int128 frac = scaled % scale;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(whole));
  if (digits > 0) {
    std::string tail(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      tail[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += "." + tail;
  }
  return out;
}

}  // namespace starpir
