#pragma once

#include <string>
#include <vector>

namespace fnls {

struct ScanPoint {
  double parameter = 0.0;
  double value = 0.0;
  double aux1 = 0.0;
  double aux2 = 0.0;
};

// Measurements against one scanned parameter and the power law fitted through
// them by least squares on (log parameter, log value).
struct ScanResult {
  std::string parameter_name;
  std::vector<ScanPoint> points;
  double fitted_slope = 0.0;
  double slope_stderr = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  // Standard deviation of log(value) over the fitted points.
  double log_spread = 0.0;
  // Leading points left out of the fit as pre-asymptotic.
  std::size_t dropped = 0;

  static constexpr double kMinRSquared = 0.98;
  // Below this spread the values are constant to within 1%, so r^2 says
  // little about the fit; reported as a diagnostic only, flagging is unchanged.
  static constexpr double kFlatSpread = 0.01;

  bool flat() const { return log_spread <= kFlatSpread; }
  bool flagged() const { return r_squared < kMinRSquared; }
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 0.0;
  double y_spread = 0.0;  // standard deviation of y
};

// Ordinary least squares y = intercept + slope*x; needs >= 3 points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Sorts the points, optionally drops the smallest parameter when at least 5
// points remain afterwards, and fits log(value) against log(parameter).
// Needs >= 4 points with positive parameter and value.
ScanResult fit_power_law(std::string parameter_name, std::vector<ScanPoint> points,
                         bool drop_preasymptotic = true);

}  // namespace fnls
