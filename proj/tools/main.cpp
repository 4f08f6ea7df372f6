// scatter1d: forward scattering, spectra sweeps, inverse design, and the
// self-verification suite for finite-range 1-D potentials.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
// 3 solver failure, 4 spectral singularity at the requested wavenumber.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "scatter1d/amplitudes.hpp"
#include "scatter1d/design.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/evolution.hpp"
#include "scatter1d/io.hpp"
#include "scatter1d/verify.hpp"

namespace {

using namespace scatter1d;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitSingularity = 4;

struct CommonOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::string out;

  IntegratorConfig integrator() const {
    IntegratorConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--rel-tol", opts.rel_tol, "integrator relative tolerance");
  cmd->add_option("--abs-tol", opts.abs_tol, "integrator absolute tolerance");
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
}

// Writes `text` to opts.out or stdout.
void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw ConfigError("cannot open output file '" + opts.out + "'");
  f << text;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  double at(int i) const {
    return n < 2 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
  }
};

Range parse_range(const std::string& text) {
  Range r;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.n, &extra) !=
          3 ||
      r.n < 1 || !(r.hi >= r.lo))
    throw ConfigError("range must be lo:hi:n with hi >= lo and n >= 1: '" +
                      text + "'");
  return r;
}

unsigned thread_budget(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SCATTER1D_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0 && static_cast<unsigned>(cap) < hw)
      hw = static_cast<unsigned>(cap);
  }
  return std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1));
}

Route parse_route(const std::string& name) {
  if (name == "evolution") return Route::Evolution;
  if (name == "jost") return Route::Jost;
  if (name == "s") return Route::SForm;
  if (name == "auto") return Route::Auto;
  throw ConfigError("unknown route '" + name + "'");
}

DesignGoal parse_goal(const std::string& name) {
  if (name == "lasing") return DesignGoal::Lasing;
  if (name == "cpa") return DesignGoal::Cpa;
  if (name == "uinv") return DesignGoal::RightInvisible;
  throw ConfigError("unknown goal '" + name + "'");
}

int cmd_scatter(const CommonOptions& opts, const std::string& potential_spec,
                double k, const std::string& route_name,
                const std::string& format) {
  const Potential p = potential_from_spec_string(potential_spec);
  if (!(k > 0.0)) throw ConfigError("--k must be positive");
  if (format != "json" && format != "csv")
    throw ConfigError("unknown format '" + format + "'");
  const Route route = parse_route(route_name);
  const IntegratorConfig cfg = opts.integrator();
  try {
    const ScatteringAmplitudes amps = scatter(p, k, route, cfg);
    const SpectralFlags flags = classify(amps);
    if (format == "csv") {
      SweepRow row;
      row.k = k;
      row.amps = amps;
      row.route_deviation = amps.route_deviation;
      std::ostringstream os;
      write_sweep_csv(os, {row});
      emit(opts, os.str());
    } else {
      emit(opts, amplitudes_to_json(amps, flags).dump(2) + "\n");
    }
    return flags.spectral_singularity ? kExitSingularity : kExitOk;
  } catch (const SpectralSingularityError&) {
    // T is undefined here; report the matrix-based classification.
    const Complex2x2 m = evolve_transfer(p, k, cfg).final_matrix();
    const SpectralFlags flags = classify_matrix(m);
    json j;
    j["k"] = k;
    j["spectral_singularity"] = true;
    j["inv_transmission"] = complex_to_json(m.m22);
    j["m11"] = complex_to_json(m.m11);
    j["flags"]["spectral_singularity"] = flags.spectral_singularity;
    j["flags"]["cpa"] = flags.cpa;
    emit(opts, j.dump(2) + "\n");
    return kExitSingularity;
  }
}

int cmd_trajectory(const CommonOptions& opts,
                   const std::string& potential_spec, double k, int samples) {
  const Potential p = potential_from_spec_string(potential_spec);
  if (!(k > 0.0)) throw ConfigError("--k must be positive");
  const TransferTrajectory traj = evolve_transfer(p, k, opts.integrator());
  std::ostringstream os;
  write_trajectory_csv(os, traj, samples);
  emit(opts, os.str());
  return kExitOk;
}

// Strided parallel map over [0, n) preserving output order.
template <typename Fn>
void parallel_rows(int n, Fn&& fn) {
  const unsigned workers = thread_budget(n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = int(t); i < n; i += int(workers)) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

int cmd_sweep(const CommonOptions& opts, const std::string& potential_spec,
              const std::string& k_range, const std::string& goal_name,
              double gamma_re, double gamma_im, const std::string& k0l_range,
              double k0, const std::string& route_name,
              const std::string& format) {
  const IntegratorConfig cfg = opts.integrator();

  if (!k0l_range.empty()) {
    // Design sweep: one invisibility design per k0L, amplitudes at its k0.
    const DesignGoal goal = parse_goal(goal_name.empty() ? "uinv" : goal_name);
    if (goal != DesignGoal::RightInvisible)
      throw ConfigError("--k0L-range sweeps support --goal uinv");
    const Range range = parse_range(k0l_range);
    std::vector<DesignSweepRow> rows(range.n);
    parallel_rows(range.n, [&](int i) {
      DesignSpec spec;
      spec.k0 = k0;
      spec.length = range.at(i) / k0;
      spec.goal = DesignGoal::RightInvisible;
      spec.gamma = Cx{gamma_re, gamma_im};
      rows[i].k0L = range.at(i);
      rows[i].transmission = predicted_transmission(spec);
      rows[i].left_reflection = predicted_left_reflection(spec, cfg);
    });
    std::ostringstream os;
    write_design_sweep_csv(os, rows);
    emit(opts, os.str());
    return kExitOk;
  }

  if (potential_spec.empty())
    throw ConfigError("sweep needs --potential with --k-range, or --k0L-range");
  const Potential p = potential_from_spec_string(potential_spec);
  const Range range = parse_range(k_range);
  const Route route = parse_route(route_name);

  std::vector<SweepRow> rows(range.n);
  parallel_rows(range.n, [&](int i) {
    const double k = range.at(i);
    rows[i].k = k;
    try {
      const ScatteringAmplitudes amps = scatter(p, k, route, cfg);
      rows[i].amps = amps;
      rows[i].route_deviation = amps.route_deviation;
    } catch (const SpectralSingularityError&) {
      rows[i].amps.reset();  // flagged, not aborted
    }
  });

  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const SweepRow& row : rows) {
      json j;
      j["k"] = row.k;
      if (row.amps) {
        j["left_reflection"] = complex_to_json(row.amps->left_reflection);
        j["right_reflection"] = complex_to_json(row.amps->right_reflection);
        j["transmission"] = complex_to_json(row.amps->transmission);
        j["route_deviation"] = row.route_deviation;
      } else {
        j["spectral_singularity"] = true;
      }
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    write_sweep_csv(os, rows);
  } else {
    throw ConfigError("unknown format '" + format + "'");
  }
  emit(opts, os.str());
  return kExitOk;
}

int cmd_design(const CommonOptions& opts, const std::string& goal_flag,
               double k0, double length, double k0L, double gamma_re,
               double gamma_im, int profile_points,
               const std::string& profile_out,
               const std::string& potential_out) {
  DesignSpec spec;
  spec.goal = parse_goal(goal_flag);
  spec.gamma = Cx{gamma_re, gamma_im};
  if (k0L > 0.0) {
    if (length > 0.0) {
      spec.length = length;
      spec.k0 = k0L / length;
    } else {
      spec.k0 = k0 > 0.0 ? k0 : 1.0;
      spec.length = k0L / spec.k0;
    }
  } else if (k0 > 0.0 && length > 0.0) {
    spec.k0 = k0;
    spec.length = length;
  } else {
    throw ConfigError("design needs --k0L (with optional --k0 or --L), or "
                      "--k0 and --L");
  }

  const IntegratorConfig cfg = opts.integrator();
  const DesignResult result = make_design(spec);
  const IndexProfileRecord profile =
      sample_index_profile(result, profile_points);

  // Forward verification at k0.
  json verification;
  if (spec.goal == DesignGoal::Lasing) {
    const Complex2x2 m =
        evolve_transfer(result.potential, spec.k0, cfg).final_matrix();
    verification["inv_transmission_residual"] = std::abs(m.m22);
  } else if (spec.goal == DesignGoal::Cpa) {
    const Complex2x2 m =
        evolve_transfer(result.potential, spec.k0, cfg).final_matrix();
    verification["cpa_residual"] = std::abs(m.m11) / m.max_abs();
  } else {
    const ScatteringAmplitudes amps =
        scatter(result.potential, spec.k0, Route::Auto, cfg);
    verification["right_reflection_residual"] =
        std::abs(amps.right_reflection);
    verification["transmission_error"] =
        std::abs(amps.transmission - *result.predicted_transmission);
    verification["route_deviation"] = amps.route_deviation;
    verification["left_reflection"] = complex_to_json(amps.left_reflection);
  }

  if (!profile_out.empty()) {
    std::ofstream f(profile_out);
    if (!f) throw ConfigError("cannot open '" + profile_out + "'");
    write_profile_csv(f, profile);
  }
  if (!potential_out.empty()) {
    json pj;
    pj["kind"] = "index_sampled";
    pj["x"] = profile.x;
    json re = json::array(), im = json::array();
    for (const Cx& v : profile.n_squared) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    pj["n2_re"] = std::move(re);
    pj["n2_im"] = std::move(im);
    std::ofstream f(potential_out);
    if (!f) throw ConfigError("cannot open '" + potential_out + "'");
    f << pj.dump() << "\n";
  }

  emit(opts, design_to_json(result, profile, verification).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const CommonOptions& opts, double tolerance_scale) {
  const VerificationReport report =
      run_verification(opts.integrator(), tolerance_scale);
  std::ostringstream os;
  int index = 0, failures = 0;
  for (const CheckResult& c : report.checks) {
    ++index;
    failures += c.passed ? 0 : 1;
    char line[512];
    std::snprintf(line, sizeof line,
                  "[%s] %2d. %s: residual %.3e (threshold %.3e)%s%s\n",
                  c.passed ? "PASS" : "FAIL", index, c.name.c_str(),
                  c.residual, c.threshold, c.detail.empty() ? "" : " -- ",
                  c.detail.c_str());
    os << line;
  }
  os << (index - failures) << "/" << index << " checks passed\n";
  emit(opts, os.str());
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"scatter1d: reflection/transmission of finite-range complex "
               "potentials and inverse design of optical profiles"};
  app.require_subcommand(1);

  // scatter
  auto* scatter_cmd =
      app.add_subcommand("scatter", "amplitudes and flags at one wavenumber");
  CommonOptions scatter_opts;
  std::string scatter_potential, scatter_route = "auto";
  std::string scatter_format = "json";
  double scatter_k = 0.0;
  scatter_cmd->add_option("--potential", scatter_potential,
                          "potential spec (inline JSON or file path)")
      ->required();
  scatter_cmd->add_option("--k", scatter_k, "wavenumber")->required();
  scatter_cmd->add_option("--route", scatter_route,
                          "evolution|jost|s|auto (default auto)");
  scatter_cmd->add_option("--format", scatter_format,
                          "json|csv (default json)");
  add_common(scatter_cmd, scatter_opts);

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "amplitude spectra over k, or design spectra over k0L");
  CommonOptions sweep_opts;
  std::string sweep_potential, sweep_krange, sweep_goal, sweep_k0l_range;
  std::string sweep_route = "auto", sweep_format = "csv";
  double sweep_gamma = 1e-6, sweep_gamma_im = 0.0, sweep_k0 = 1.0;
  sweep_cmd->add_option("--potential", sweep_potential,
                        "potential spec (inline JSON or file path)");
  sweep_cmd->add_option("--k-range", sweep_krange, "lo:hi:n");
  sweep_cmd->add_option("--goal", sweep_goal, "design goal for k0L sweeps");
  sweep_cmd->add_option("--gamma", sweep_gamma, "design strength (real part)");
  sweep_cmd->add_option("--gamma-im", sweep_gamma_im,
                        "design strength (imaginary part)");
  sweep_cmd->add_option("--k0L-range", sweep_k0l_range,
                        "lo:hi:n over k0L (design sweep)");
  sweep_cmd->add_option("--k0", sweep_k0, "design wavenumber (default 1)");
  sweep_cmd->add_option("--route", sweep_route, "evolution|jost|s|auto");
  sweep_cmd->add_option("--format", sweep_format, "csv|json (default csv)");
  add_common(sweep_cmd, sweep_opts);

  // design
  auto* design_cmd =
      app.add_subcommand("design", "construct an optical profile");
  CommonOptions design_opts;
  std::string design_goal, design_profile_out, design_potential_out;
  double design_k0 = 0.0, design_length = 0.0, design_k0L = 0.0;
  double design_gamma = 1e-6, design_gamma_im = 0.0;
  int design_points = 1024;
  design_cmd->add_option("--goal", design_goal, "lasing|cpa|uinv")->required();
  design_cmd->add_option("--k0", design_k0, "design wavenumber");
  design_cmd->add_option("--L", design_length, "interval length");
  design_cmd->add_option("--k0L", design_k0L, "dimensionless product k0*L");
  design_cmd->add_option("--gamma", design_gamma,
                         "strength, real part (uinv)");
  design_cmd->add_option("--gamma-im", design_gamma_im,
                         "strength, imaginary part (uinv)");
  design_cmd->add_option("--profile-points", design_points,
                         "profile sample count");
  design_cmd->add_option("--profile-out", design_profile_out,
                         "write the sampled profile CSV here");
  design_cmd->add_option("--potential-out", design_potential_out,
                         "write an index_sampled potential JSON here");
  add_common(design_cmd, design_opts);

  // trajectory
  auto* traj_cmd = app.add_subcommand(
      "trajectory", "transfer-matrix trajectory M(alpha) as CSV");
  CommonOptions traj_opts;
  std::string traj_potential;
  double traj_k = 0.0;
  int traj_samples = 0;
  traj_cmd->add_option("--potential", traj_potential,
                       "potential spec (inline JSON or file path)")
      ->required();
  traj_cmd->add_option("--k", traj_k, "wavenumber")->required();
  traj_cmd->add_option("--samples", traj_samples,
                       "uniform sample count (default: integrator steps)");
  add_common(traj_cmd, traj_opts);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full cross-check suite");
  CommonOptions verify_opts;
  double verify_scale = 1.0;
  verify_cmd->add_option("--tolerance-scale", verify_scale,
                         "multiply all pass thresholds");
  add_common(verify_cmd, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (scatter_cmd->parsed())
      return cmd_scatter(scatter_opts, scatter_potential, scatter_k,
                         scatter_route, scatter_format);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_opts, sweep_potential, sweep_krange, sweep_goal,
                       sweep_gamma, sweep_gamma_im, sweep_k0l_range, sweep_k0,
                       sweep_route, sweep_format);
    if (design_cmd->parsed())
      return cmd_design(design_opts, design_goal, design_k0, design_length,
                        design_k0L, design_gamma, design_gamma_im,
                        design_points, design_profile_out,
                        design_potential_out);
    if (traj_cmd->parsed())
      return cmd_trajectory(traj_opts, traj_potential, traj_k, traj_samples);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, verify_scale);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SingularProfile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SpectralSingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingularity;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
