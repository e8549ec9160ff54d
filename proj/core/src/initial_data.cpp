#include "fnls/initial_data.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "fnls/errors.hpp"

namespace fnls {

namespace {

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ValidationError("initial data: '" + key + "' needs a finite number, got '" + text + "'");
  }
  return v;
}

const std::set<std::string>& keys_for(const std::string& name) {
  static const std::set<std::string> plane{"a", "k"};
  static const std::set<std::string> packet{"a", "w", "x0", "k0"};
  static const std::set<std::string> none{};
  if (name == "plane") return plane;
  if (name == "gaussian" || name == "sech") return packet;
  if (name == "zero") return none;
  throw ValidationError("unknown initial data '" + name + "' (expected plane, gaussian, sech or zero)");
}

}  // namespace

double InitialDataSpec::get(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

InitialDataSpec parse_initial_data(const std::string& text) {
  InitialDataSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  const auto& allowed = keys_for(spec.name);
  if (colon == std::string::npos) return spec;

  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("initial data: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (!allowed.count(key)) {
      throw ValidationError("initial data '" + spec.name + "' has no parameter '" + key + "'");
    }
    spec.params[key] = parse_number(key, item.substr(eq + 1));
  }
  return spec;
}

Field make_initial_data(const InitialDataSpec& spec, const Grid& grid) {
  keys_for(spec.name);
  if (spec.name == "zero") return Field::zeros(grid);
  const double a = spec.get("a", 1.0);
  if (spec.name == "plane") {
    const double k = std::round(spec.get("k", 0.0) / grid.dk()) * grid.dk();
    return Field::from_function(grid, [=](double x) { return a * std::polar(1.0, k * x); });
  }
  const double w = spec.get("w", 1.0);
  if (!(w > 0.0)) throw ValidationError("initial data: width w must be positive");
  const double x0 = spec.get("x0", 0.0);
  const double k0 = spec.get("k0", 0.0);
  const bool gaussian = spec.name == "gaussian";
  return Field::from_function(grid, [=](double x) {
    const double y = (x - x0) / w;
    const double env = gaussian ? std::exp(-0.5 * y * y) : 1.0 / std::cosh(y);
    return a * env * std::polar(1.0, k0 * x);
  });
}

Field make_initial_data(const std::string& text, const Grid& grid) {
  return make_initial_data(parse_initial_data(text), grid);
}

}  // namespace fnls
