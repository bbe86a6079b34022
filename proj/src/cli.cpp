#include "qreset/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qreset/experiments.hpp"
#include "qreset/io.hpp"
#include "qreset/trajectories.hpp"
#include "qreset/witnesses.hpp"

namespace qreset::cli {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, sep)) parts.push_back(token);
  return parts;
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError(std::string(what) + ": not a number: " + s);
  }
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError(std::string(what) + ": not an integer: " + s);
  }
}

std::vector<double> read_number_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    values.push_back(to_double(line.substr(first), "survival file"));
  }
  return values;
}

}  // namespace

ResetSchedule parse_schedule(const std::string& spec, int horizon) {
  auto need_horizon = [&] {
    if (horizon < 1)
      throw ParameterError("schedule '" + spec + "' needs a positive horizon/steps value");
  };
  if (spec == "cosine") {
    need_horizon();
    return ResetSchedule::cosine(horizon);
  }
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "const") {
    need_horizon();
    return ResetSchedule::constant(to_double(parts[1], "const schedule"), horizon);
  }
  if (parts.size() == 3 && parts[0] == "ramp") {
    need_horizon();
    return ResetSchedule::ramp(to_double(parts[1], "ramp slope"),
                               to_double(parts[2], "ramp cap"), horizon);
  }
  if (parts.size() >= 2 && parts[0] == "file") {
    return load_schedule(spec.substr(5));
  }
  if (parts.size() >= 2 && parts[0] == "survival-file") {
    return ResetSchedule::from_survival(read_number_lines(spec.substr(14)));
  }
  throw ParameterError("malformed schedule spec: " + spec);
}

namespace {

// --model rydberg:<omega>:<v> | haar:<dim>:<seed>
KrausChannel parse_model(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "rydberg") {
    RydbergModel model(to_double(parts[1], "omega"), to_double(parts[2], "V"));
    return KrausChannel::unitary(model.unitary);
  }
  if (parts.size() == 3 && parts[0] == "haar") {
    int dim = static_cast<int>(to_long(parts[1], "model dim"));
    if (dim < 2) throw ParameterError("model dim must be >= 2");
    Rng rng(static_cast<std::uint64_t>(to_long(parts[2], "model seed")));
    return KrausChannel::unitary(haar_unitary(dim, rng));
  }
  throw ParameterError("malformed model spec: " + spec);
}

// --reset/--rho0 basis:<k> | mixed | plus
DensityMatrix parse_state(const std::string& spec, int dim) {
  if (spec == "mixed") return DensityMatrix::maximally_mixed(dim);
  if (spec == "plus") {
    Vector v = Vector::Ones(dim);
    return DensityMatrix::pure(v);
  }
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "basis") {
    int k = static_cast<int>(to_long(parts[1], "basis index"));
    return DensityMatrix::pure(basis_state(dim, k));
  }
  throw ParameterError("malformed state spec: " + spec);
}

Matrix parse_observable(const std::string& spec, int dim) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "random") {
    Rng rng(static_cast<std::uint64_t>(to_long(parts[1], "observable seed")));
    return random_hermitian(dim, 0.75, rng);
  }
  throw ParameterError("malformed observable spec: " + spec);
}

fs::path resolve_outdir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QRESET_OUTDIR"); env && *env) return env;
  return ".";
}

fs::path open_out(const fs::path& dir, const std::string& name, std::ofstream& out) {
  fs::create_directories(dir);
  fs::path path = dir / name;
  out.open(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return path;
}

struct CommonArgs {
  std::string schedule = "const:0.1";
  std::string model = "haar:2:1";
  std::string reset = "basis:0";
  std::string rho0 = "basis:1";
  std::string outdir;
  int steps = 100;
};

int run_tables(const std::string& schedule_spec, int horizon, const std::string& outdir) {
  ResetSchedule schedule = parse_schedule(schedule_spec, horizon);
  int table_horizon = horizon > 0 ? horizon : schedule.horizon();
  RenewalTables tables = build_tables(schedule.extended(table_horizon), table_horizon);
  std::ofstream out;
  fs::path path = open_out(resolve_outdir(outdir), "tables.csv", out);
  write_tables_csv(schedule, tables, out);
  double sum_p = 0.0;
  for (double p : tables.waiting) sum_p += p;
  std::cout << "tables: wrote " << path.string() << " (horizon " << table_horizon
            << ", sum p = " << fmt17(sum_p) << ")\n";
  return 0;
}

int run_propagate(const CommonArgs& args) {
  KrausChannel channel = parse_model(args.model);
  ResetProcess process(channel, parse_state(args.reset, channel.dim()),
                       parse_schedule(args.schedule, args.steps));
  auto states = propagate(process, parse_state(args.rho0, channel.dim()), args.steps);
  std::ofstream out;
  fs::path path = open_out(resolve_outdir(args.outdir), "propagate.csv", out);
  write_states_csv(states, out);
  std::cout << "propagate: wrote " << path.string() << " (" << states.size() << " states)\n";
  return 0;
}

int run_witness(const CommonArgs& args, const std::string& observable_spec) {
  KrausChannel channel = parse_model(args.model);
  ResetProcess process(channel, parse_state(args.reset, channel.dim()),
                       parse_schedule(args.schedule, args.steps));
  Matrix x = parse_observable(observable_spec, channel.dim());
  WitnessSeries schrodinger = trace_norm_series(process, x, args.steps);
  WitnessSeries heisenberg = operator_norm_series(process, x, args.steps);
  fs::path dir = resolve_outdir(args.outdir);
  std::ofstream out_s, out_h;
  fs::path path_s = open_out(dir, "witness_schrodinger.csv", out_s);
  write_witness_csv(schrodinger, out_s);
  fs::path path_h = open_out(dir, "witness_heisenberg.csv", out_h);
  write_witness_csv(heisenberg, out_h);
  std::cout << "witness: wrote " << path_s.string() << ", " << path_h.string() << " ("
            << schrodinger.positive_increments() << " / " << heisenberg.positive_increments()
            << " positive increments)\n";
  return 0;
}

int run_trajectories(const CommonArgs& args, int samples, std::uint64_t seed) {
  KrausChannel channel = parse_model(args.model);
  ResetProcess process(channel, parse_state(args.reset, channel.dim()),
                       parse_schedule(args.schedule, args.steps));
  DensityMatrix rho0 = parse_state(args.rho0, channel.dim());
  EnsembleResult ensemble = ensemble_average(process, rho0, args.steps, samples, seed);
  std::vector<Trajectory> realizations;
  realizations.reserve(samples);
  for (int n = 0; n < samples; ++n) {
    Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(n)));
    Trajectory t = sample_trajectory(process, rho0, args.steps, rng);
    t.states.clear();
    realizations.push_back(std::move(t));
  }
  fs::path dir = resolve_outdir(args.outdir);
  std::ofstream out_mean, out_resets;
  fs::path path_mean = open_out(dir, "trajectories_mean.csv", out_mean);
  write_ensemble_csv(ensemble, out_mean);
  fs::path path_resets = open_out(dir, "trajectories_resets.txt", out_resets);
  write_reset_times(realizations, out_resets);
  std::cout << "trajectories: wrote " << path_mean.string() << ", " << path_resets.string()
            << " (" << samples << " samples)\n";
  return 0;
}

int run_analytic_psi(double r, int t) {
  Matrix image = alternating_intertwining_image(pauli_x(), basis_state(2, 0), r, t);
  std::cout << "Psi(2t+1,2t)[|psi><psi|] for U = sigma_x, psi = |0>, r = " << r
            << ", t = " << t << ":\n";
  for (Eigen::Index i = 0; i < image.rows(); ++i) {
    for (Eigen::Index j = 0; j < image.cols(); ++j) {
      Complex z = image(i, j);
      std::cout << (j ? "  " : "") << fmt17(z.real());
      if (z.imag() != 0.0) std::cout << (z.imag() > 0 ? "+" : "") << fmt17(z.imag()) << "i";
    }
    std::cout << '\n';
  }
  std::cout << "min eigenvalue: " << fmt17(min_eigenvalue_hermitian(image)) << '\n';
  return 0;
}

int run_fig2(const Fig2Options& options, const std::string& outdir) {
  Fig2Result result = fig2_batch(options);
  fs::path dir = resolve_outdir(outdir);
  std::ofstream out_series, out_summary;
  fs::path path_series = open_out(dir, "fig2_series.csv", out_series);
  write_fig2_series_csv(result, out_series);
  fs::path path_summary = open_out(dir, "fig2_summary.csv", out_summary);
  write_fig2_summary_csv(result, out_summary);
  std::cout << "fig2: wrote " << path_series.string() << ", " << path_summary.string() << " ("
            << result.schrodinger_events << " positive delta events, "
            << result.heisenberg_events << " positive deltastar events)\n";
  return 0;
}

int run_fig3a(const Fig3aOptions& options, const std::string& outdir) {
  Fig3aResult result = fig3a_scan(options);
  std::ofstream out;
  fs::path path = open_out(resolve_outdir(outdir), "fig3a.csv", out);
  write_fig3a_csv(result, out);
  double best = 0.0;
  for (double c : result.max_concurrence_per_v) best = std::max(best, c);
  std::cout << "fig3a: wrote " << path.string() << " (" << result.cells.size()
            << " cells, best stationary concurrence " << fmt17(best) << ")\n";
  return 0;
}

int run_fig3b(const Fig3bOptions& options, const std::string& outdir) {
  Fig3bResult result = fig3b_schedule_run(options);
  const char* kind = options.kind == Fig3bScheduleKind::linear_ramp ? "ramp" : "cosine";
  std::ofstream out;
  fs::path path =
      open_out(resolve_outdir(outdir), std::string("fig3b_") + kind + ".csv", out);
  write_fig3b_csv(result, out);
  std::cout << "fig3b: wrote " << path.string() << " (stationary concurrence "
            << fmt17(result.stationary_concurrence)
            << (result.converged ? "" : ", NOT CONVERGED") << ")\n";
  if (!result.converged) {
    std::cerr << "fig3b: no stationarity within " << options.max_steps << " steps\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"discrete-time quantum stochastic resetting: renewal maps, "
               "non-Markovianity witnesses, and experiment drivers"};
  app.require_subcommand(1);

  CommonArgs common;
  int horizon = 0;
  int samples = 1000;
  std::uint64_t seed = 1;
  double analytic_r = 0.5;
  int analytic_t = 1;
  std::string observable = "random:7";
  std::string fig3b_kind = "ramp";
  Fig2Options fig2;
  Fig3aOptions fig3a;
  Fig3bOptions fig3b;
  double vmin = 0.0, vmax = 4.0;
  int vcount = 41, rcount = 101;

  auto add_common = [&common](CLI::App* cmd, bool with_rho0) {
    cmd->add_option("--schedule", common.schedule, "schedule spec (see --help-all)");
    cmd->add_option("--steps", common.steps, "number of time steps");
    cmd->add_option("--model", common.model, "channel spec: rydberg:<omega>:<v> | haar:<dim>:<seed>");
    cmd->add_option("--reset", common.reset, "reset state: basis:<k> | mixed | plus");
    if (with_rho0) cmd->add_option("--rho0", common.rho0, "initial state spec");
    cmd->add_option("--out", common.outdir, "output directory (default: $QRESET_OUTDIR or .)");
  };

  auto* cmd_tables = app.add_subcommand("tables", "renewal tables S(t), p(t), nu(t)");
  cmd_tables->add_option("--schedule", common.schedule, "schedule spec")->required();
  cmd_tables->add_option("--horizon", horizon, "table horizon");
  cmd_tables->add_option("--out", common.outdir, "output directory");

  auto* cmd_propagate = app.add_subcommand("propagate", "ensemble-averaged state evolution");
  add_common(cmd_propagate, true);

  auto* cmd_witness =
      app.add_subcommand("witness", "norm monotonicity series in both pictures");
  add_common(cmd_witness, false);
  cmd_witness->add_option("--observable", observable, "Hermitian witness operator: random:<seed>");

  auto* cmd_traj = app.add_subcommand("trajectories", "Monte Carlo realizations and their mean");
  add_common(cmd_traj, true);
  cmd_traj->add_option("--samples", samples, "number of realizations");
  cmd_traj->add_option("--seed", seed, "master seed");

  auto* cmd_psi =
      app.add_subcommand("analytic-psi", "closed-form Heisenberg intertwining image "
                                         "(built-in U = sigma_x, psi = |0>)");
  cmd_psi->add_option("--r", analytic_r, "reset probability in (0,1)");
  cmd_psi->add_option("--t", analytic_t, "step index t >= 1");

  auto* cmd_fig2 = app.add_subcommand("fig2", "random-process witness batch");
  cmd_fig2->add_option("--processes", fig2.num_processes, "number of processes");
  cmd_fig2->add_option("--steps", fig2.steps, "time horizon");
  cmd_fig2->add_option("--rmax", fig2.r_max, "upper bound of the uniform rate draw");
  cmd_fig2->add_option("--seed", fig2.seed, "master seed")->required();
  cmd_fig2->add_option("--out", common.outdir, "output directory");

  auto* cmd_fig3a = app.add_subcommand("fig3a", "stationary concurrence over (V, r)");
  cmd_fig3a->add_option("--omega", fig3a.omega, "drive strength");
  cmd_fig3a->add_option("--vmin", vmin, "smallest interaction strength");
  cmd_fig3a->add_option("--vmax", vmax, "largest interaction strength");
  cmd_fig3a->add_option("--vcount", vcount, "number of V grid points");
  cmd_fig3a->add_option("--rcount", rcount, "number of r grid points");
  cmd_fig3a->add_option("--tol", fig3a.tol, "stationarity tolerance (trace distance)");
  cmd_fig3a->add_option("--max-steps", fig3a.max_steps, "iteration cap per cell");
  cmd_fig3a->add_option("--out", common.outdir, "output directory");

  auto* cmd_fig3b = app.add_subcommand("fig3b", "stationary concurrence for a time-dependent schedule");
  cmd_fig3b->add_option("--v", fig3b.interaction, "interaction strength")->required();
  cmd_fig3b->add_option("--kind", fig3b_kind, "schedule kind: ramp | cosine");
  cmd_fig3b->add_option("--omega", fig3b.omega, "drive strength");
  cmd_fig3b->add_option("--tol", fig3b.tol, "stationarity tolerance (trace distance)");
  cmd_fig3b->add_option("--max-steps", fig3b.max_steps, "iteration cap");
  cmd_fig3b->add_option("--out", common.outdir, "output directory");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_tables))
      return run_tables(common.schedule, horizon, common.outdir);
    if (app.got_subcommand(cmd_propagate)) return run_propagate(common);
    if (app.got_subcommand(cmd_witness)) return run_witness(common, observable);
    if (app.got_subcommand(cmd_traj)) return run_trajectories(common, samples, seed);
    if (app.got_subcommand(cmd_psi)) return run_analytic_psi(analytic_r, analytic_t);
    if (app.got_subcommand(cmd_fig2)) return run_fig2(fig2, common.outdir);
    if (app.got_subcommand(cmd_fig3a)) {
      fig3a.v_grid = linspace(vmin, vmax, vcount);
      fig3a.r_grid = linspace(0.0, 1.0, rcount);
      return run_fig3a(fig3a, common.outdir);
    }
    if (app.got_subcommand(cmd_fig3b)) {
      if (fig3b_kind == "ramp")
        fig3b.kind = Fig3bScheduleKind::linear_ramp;
      else if (fig3b_kind == "cosine")
        fig3b.kind = Fig3bScheduleKind::cosine;
      else
        throw ParameterError("fig3b --kind must be 'ramp' or 'cosine'");
      return run_fig3b(fig3b, common.outdir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qreset::cli
