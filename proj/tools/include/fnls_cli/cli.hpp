#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fnls/constructions.hpp"
#include "fnls/evolution.hpp"
#include "fnls/experiments.hpp"
#include "fnls/report.hpp"

namespace fnls::cli {

enum ExitCode { kOk = 0, kValidation = 1, kRuntime = 2 };

struct GridFlags {
  std::size_t nx;
  double length;
};

// Union of every subcommand's parameters. Values come from the --config file
// (flat key=value lines keyed by flag name) and are overridden by flags.
struct RunConfig {
  std::string command;
  std::string config_path;
  std::string out;
  long long seed = 0;

  // evolve, picard
  SimConfig sim;
  GridFlags sim_grid{256, 6.283185307179586};
  std::string init = "gaussian:a=1,w=1";
  std::string phase = "dealiased";
  int iterations = 12;

  // scan-trilinear
  double tri_alpha = 1.5;
  double tri_s = 0.0;
  double tri_b = 0.51;
  std::vector<double> tri_n{16, 32, 64, 128, 256};
  int xi_samples = 16;
  int tau_samples = 8;

  // scan-remainder
  double rem_alpha = 1.5;
  std::vector<double> rem_n{16, 32, 64, 128, 256, 512, 1024};
  double xi_max = 1.0;
  std::size_t samples = 4000;

  // scan-wavepacket
  std::vector<double> wp_s{-0.25, 0.0, 0.25};
  std::vector<double> wp_m{16, 32, 64, 128, 256, 512};
  WavepacketSpec packet;
  std::string envelope = "gaussian";
  GridFlags wp_grid{16384, 64.0};

  // approx-error
  ApproxErrorConfig approx;
  GridFlags approx_y{256, 64.0};
  GridFlags approx_x{2048, 32.0};
  std::string approx_profile = "gaussian";

  // illposed
  IllposedConfig ill;
  GridFlags ill_y{2048, 128.0};
  GridFlags ill_x{16384, 128.0};
  std::string ill_profile = "sech";

  // verify
  std::vector<int> gates;

  // Builds the typed configs from the flag values; throws ValidationError.
  void resolve();
  // Resolved configuration of the selected subcommand, echoed into headers.
  Report to_report() const;
};

// Parses argv, runs the subcommand and returns the exit code. Reports go to
// `out`, diagnostics and usage to `err`.
int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

// Rows t,x,re,im for every record.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace fnls::cli
