#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fnls/fit.hpp"

namespace fnls {

// Artifact version echoed into every output header.
const char* version();

// 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

// Ordered key=value report.
class Report {
 public:
  void set(const std::string& key, double value);
  void set(const std::string& key, long long value);
  void set(const std::string& key, int value) { set(key, static_cast<long long>(value)); }
  void set(const std::string& key, std::size_t value) { set(key, static_cast<long long>(value)); }
  void set(const std::string& key, bool value);
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }

  // Appends every entry of `other` with `prefix` prepended to its key.
  void merge(const std::string& prefix, const Report& other);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  // Value of `key`, or empty when absent.
  std::string get(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Header block: "# fnls <version>" followed by one "# key=value" line per
// resolved configuration entry.
void write_header(std::ostream& os, const Report& config);

void write_report(std::ostream& os, const Report& report);

// CSV with columns parameter,value,aux1,aux2 (header row included).
void write_scan_csv(std::ostream& os, const ScanResult& scan);

// Fit summary keys: parameter, slope, slope_stderr, r_squared, log_spread,
// dropped, points, flagged.
Report scan_summary(const ScanResult& scan);

}  // namespace fnls
