#include "emotive/json_number.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace emotive {

namespace {

std::string fixed4(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, 4);
  if (ec != std::errc()) throw std::range_error("format4: value out of range");
  return {buf.data(), ptr};
}

}  // namespace

double quantize4(double x) {
  if (!std::isfinite(x)) throw std::domain_error("quantize4: non-finite value");
  const std::string text = fixed4(x);
  double q = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), q);
  return q == 0.0 ? 0.0 : q;
}

std::string format4(double x) {
  std::string s = fixed4(quantize4(x));
  while (s.size() > 2 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

}  // namespace emotive
