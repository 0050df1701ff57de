#pragma once

#include <string>

namespace emotive {

/// Rounds to 4 decimal places by way of the decimal text, so that writing the
/// result with 4 decimals and reading it back yields the same double.
/// Negative zero is folded to +0.
double quantize4(double x);

/// Shortest text for quantize4(x): fixed 4 decimals with trailing zeros
/// trimmed, keeping at least one fractional digit ("0.0", "-12.3457").
std::string format4(double x);

}  // namespace emotive
