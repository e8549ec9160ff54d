#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/experiments.hpp"
#include "fnls/norms.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

namespace {

// Runs one pipeline stage; validation problems stay ValidationErrors (exit 1),
// everything else is tagged with the stage name.
template <typename F>
auto stage(const std::string& name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ValidationError& e) {
    throw ValidationError(name + ": " + e.what());
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

double sup_distance(const Trajectory& a, const Trajectory& b, double s) {
  double sup = 0.0;
  for (std::size_t r = 0; r < a.size() && r < b.size(); ++r) {
    sup = std::max(sup, sobolev_distance(a.states[r], b.states[r], s));
  }
  return sup;
}

}  // namespace

bool illposed_range_contains(double alpha, double s) {
  return s > (2.0 - 3.0 * alpha) / (4.0 * (alpha + 1.0)) && s < (2.0 - alpha) / 4.0;
}

Report IllposedConfig::to_report() const {
  Report r;
  r.set("alpha", alpha);
  r.set("gamma", gamma);
  r.set("s", s);
  r.set("epsilon", epsilon);
  r.set("delta", delta);
  r.set("t_final", t_final);
  r.set("n", n);
  r.set("dt", dt);
  r.set("record_every", record_every);
  r.set("y_nx", y_grid.nx());
  r.set("y_length", y_grid.length());
  r.set("nx", x_grid.nx());
  r.set("length", x_grid.length());
  r.set("profile", shape == Profile::sech ? "sech" : "gaussian");
  r.set("width", width);
  return r;
}

Report IllposedResult::to_report() const {
  Report r;
  r.set("lambda", lambda);
  r.set("slow_time", slow_time);
  r.set("width", width);
  r.set("data_norm_1", data_norm_1);
  r.set("data_norm_2", data_norm_2);
  r.set("data_separation", data_separation);
  r.set("max_separation", max_separation);
  r.set("time_of_max", time_of_max);
  r.set("amplification", amplification);
  r.set("approx_error_1", approx_error_1);
  r.set("approx_error_2", approx_error_2);
  return r;
}

IllposedResult run_illposedness_demo(const IllposedConfig& cfg) {
  stage("preconditions", [&] {
    if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0)) throw ValidationError("alpha must lie in (1, 2)");
    if (!illposed_range_contains(cfg.alpha, cfg.s)) {
      throw ValidationError("s = " + format_double(cfg.s) + " lies outside ((2-3a)/(4(a+1)), (2-a)/4) = (" +
                            format_double((2.0 - 3.0 * cfg.alpha) / (4.0 * (cfg.alpha + 1.0))) + ", " +
                            format_double((2.0 - cfg.alpha) / 4.0) + ")");
    }
    if (!(cfg.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
    if (!(cfg.delta > 0.0 && cfg.delta < cfg.epsilon)) throw ValidationError("need 0 < delta < epsilon");
    if (!(cfg.n >= 4.0)) throw ValidationError("N must be at least 4");
    if (!(cfg.t_final > 0.0)) throw ValidationError("t_final must be positive");
    return 0;
  });

  IllposedResult res;
  res.lambda = lambda_for(cfg.s, cfg.alpha, cfg.n);
  res.slow_time = std::pow(res.lambda, cfg.alpha) * cfg.t_final;

  // The data norm after the change of variables and rescaling is
  // (a(a-1)/2)^{1/4} ||v(0)||_{L^2} to leading order, independent of N.
  const double q = 0.5 * cfg.alpha * (cfg.alpha - 1.0);
  const double eps_v = cfg.epsilon / std::pow(q, 0.25);
  const double delta_v = cfg.delta / cfg.epsilon * eps_v;
  // sech soliton a sech(a y / sqrt 2) has ||.||_{L^2}^2 = 2 sqrt(2) a, so
  // matching the norm fixes the width 4 / eps_v^2.
  res.width = cfg.width > 0.0 ? cfg.width : 4.0 / (eps_v * eps_v);

  const auto data = stage("data", [&] {
    return nls_pair(eps_v, delta_v, cfg.y_grid, NlsProfile{cfg.shape, res.width, 0.0});
  });

  SimConfig slow;
  slow.alpha = 2.0;
  slow.gamma = cfg.gamma;
  slow.dt = cfg.dt;
  slow.t_final = res.slow_time;
  slow.grid = cfg.y_grid;
  slow.record_every = cfg.record_every;
  SimConfig fast = slow;
  fast.alpha = cfg.alpha;
  fast.grid = cfg.x_grid;
  fast.check_wraparound = true;
  const Grid rescaled(cfg.x_grid.nx(), cfg.x_grid.length() / res.lambda);
  const double s_err = (2.0 - cfg.alpha) / 4.0;
  // Center the path of the packet, which drifts by -alpha N^{alpha-1} S.
  const double x_shift = 0.5 * cfg.alpha * std::pow(cfg.n, cfg.alpha - 1.0) * res.slow_time;

  auto solve = [&](const Field& v0, double& approx_error) {
    const Trajectory v = stage("profile evolution", [&] { return evolve(v0, slow); });
    const Trajectory big_v = stage("approximate solution", [&] {
      return approximate_solution(v, cfg.n, cfg.alpha, cfg.x_grid, x_shift);
    });
    const Trajectory u = stage("fractional evolution", [&] { return evolve(big_v.states.front(), fast); });
    approx_error = sup_distance(u, big_v, s_err);
    return stage("rescale", [&] { return rescale_solution(u, res.lambda, cfg.alpha, rescaled); });
  };
  const Trajectory u1 = solve(data.first, res.approx_error_1);
  const Trajectory u2 = solve(data.second, res.approx_error_2);

  res.data_norm_1 = sobolev_norm(u1.states.front(), cfg.s);
  res.data_norm_2 = sobolev_norm(u2.states.front(), cfg.s);
  res.data_separation = sobolev_distance(u1.states.front(), u2.states.front(), cfg.s);
  for (std::size_t r = 0; r < u1.size() && r < u2.size(); ++r) {
    const double d = sobolev_distance(u1.states[r], u2.states[r], cfg.s);
    if (d > res.max_separation) {
      res.max_separation = d;
      res.time_of_max = u1.times[r];
    }
  }
  res.amplification = res.max_separation / res.data_separation;
  return res;
}

}  // namespace fnls
