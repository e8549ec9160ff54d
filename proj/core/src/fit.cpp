#include "fnls/fit.hpp"

#include <algorithm>
#include <cmath>

#include "fnls/errors.hpp"

namespace fnls {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw ValidationError("fit_line: x and y differ in length");
  if (n < 3) throw ValidationError("fit_line needs at least 3 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit_line: all x values coincide");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += r * r;
  }
  fit.slope_stderr = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
  // A constant response is fitted perfectly by a flat line.
  fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  fit.y_spread = std::sqrt(syy / static_cast<double>(n));
  return fit;
}

ScanResult fit_power_law(std::string parameter_name, std::vector<ScanPoint> points,
                         bool drop_preasymptotic) {
  if (points.size() < 4) throw ValidationError("a power-law fit needs at least 4 points");
  std::sort(points.begin(), points.end(),
            [](const ScanPoint& a, const ScanPoint& b) { return a.parameter < b.parameter; });
  for (const auto& p : points) {
    if (!(p.parameter > 0.0) || !(p.value > 0.0) || !std::isfinite(p.value)) {
      throw ValidationError("power-law fit needs positive finite parameters and values");
    }
  }

  ScanResult result;
  result.parameter_name = std::move(parameter_name);
  result.dropped = (drop_preasymptotic && points.size() >= 6) ? 1 : 0;
  std::vector<double> lx, ly;
  for (std::size_t i = result.dropped; i < points.size(); ++i) {
    lx.push_back(std::log(points[i].parameter));
    ly.push_back(std::log(points[i].value));
  }
  const LineFit fit = fit_line(lx, ly);
  result.points = std::move(points);
  result.fitted_slope = fit.slope;
  result.slope_stderr = fit.slope_stderr;
  result.intercept = fit.intercept;
  result.r_squared = fit.r_squared;
  result.log_spread = fit.y_spread;
  return result;
}

}  // namespace fnls
