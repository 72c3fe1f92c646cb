#pragma once

#include <cstddef>
#include <span>

namespace shc {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  /// Standard error of the slope (0 for two points).
  double slope_std_error = 0.0;
  std::size_t points = 0;
  /// Set when fewer than three points were available.
  bool low_confidence = false;
};

/// Ordinary least squares of ln y on ln x. Requires x, y > 0 and at least
/// two points; nonpositive values throw DomainError.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace shc
