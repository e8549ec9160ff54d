#pragma once

#include <string>
#include <vector>

#include "fnls/report.hpp"

namespace fnls {

// One acceptance gate: pinned parameters, measured quantities and the verdict.
// A gate also fails when it overruns its wall-clock budget or throws.
struct GateResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string failure;  // first violated condition, empty when passed
  Report measurements;

  // "PASS [3] picard-cross-check (1.2 s / 10 s)" followed by the failure, if any.
  std::string summary_line() const;
};

GateResult gate_plane_wave();
GateResult gate_conservation();
GateResult gate_picard_cross_check();
GateResult gate_trilinear();
GateResult gate_remainder();
GateResult gate_wavepacket();
GateResult gate_approximation_error();
GateResult gate_illposedness();

struct GateEntry {
  int id;
  const char* name;
  GateResult (*run)();
};

const std::vector<GateEntry>& all_gates();

}  // namespace fnls
