// One PASS/FAIL line per acceptance criterion; a failing line carries the
// first violated check. `fnls verify --out FILE` writes the full measurements.

#include <iostream>
#include <string>

#include "fnls/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& gate : fnls::all_gates()) {
    const fnls::GateResult r = gate.run();
    std::cout << r.summary_line() << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
