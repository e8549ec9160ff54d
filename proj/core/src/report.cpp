#include "fnls/report.hpp"

#include <cstdio>
#include <ostream>

#ifndef FNLS_VERSION
#define FNLS_VERSION "unknown"
#endif

namespace fnls {

const char* version() { return FNLS_VERSION; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Report::set(const std::string& key, double value) { set(key, format_double(value)); }
void Report::set(const std::string& key, long long value) { set(key, std::to_string(value)); }
void Report::set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }

void Report::set(const std::string& key, const std::string& value) {
  for (auto& e : entries_) {
    if (e.first == key) {
      e.second = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& [k, v] : other.entries()) set(prefix + k, v);
}

std::string Report::get(const std::string& key) const {
  for (const auto& e : entries_) {
    if (e.first == key) return e.second;
  }
  return {};
}

void write_header(std::ostream& os, const Report& config) {
  os << "# fnls " << version() << '\n';
  for (const auto& [k, v] : config.entries()) os << "# " << k << '=' << v << '\n';
}

void write_report(std::ostream& os, const Report& report) {
  for (const auto& [k, v] : report.entries()) os << k << '=' << v << '\n';
}

void write_scan_csv(std::ostream& os, const ScanResult& scan) {
  os << "parameter,value,aux1,aux2\n";
  for (const auto& p : scan.points) {
    os << format_double(p.parameter) << ',' << format_double(p.value) << ',' << format_double(p.aux1) << ','
       << format_double(p.aux2) << '\n';
  }
}

Report scan_summary(const ScanResult& scan) {
  Report r;
  r.set("parameter", scan.parameter_name);
  r.set("slope", scan.fitted_slope);
  r.set("slope_stderr", scan.slope_stderr);
  r.set("r_squared", scan.r_squared);
  r.set("log_spread", scan.log_spread);
  r.set("dropped", scan.dropped);
  r.set("points", scan.points.size());
  r.set("flagged", scan.flagged());
  return r;
}

}  // namespace fnls
