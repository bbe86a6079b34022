#include "qreset/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qreset {

double concurrence(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionError("concurrence: two-qubit state (dim 4) required");
  if (hermiticity_defect(rho) > 1e-9)
    throw ContractViolation("concurrence: state must be Hermitian");
  static const Matrix spin_flip = kron(pauli_y(), pauli_y());
  // The square roots of the eigenvalues of rho (sy sy) conj(rho) (sy sy) are
  // the singular values of B = sqrt(rho) (sy sy) conj(sqrt(rho)); going
  // through B keeps full precision near zero, where the eigenvalue route
  // loses half the digits to the square root.
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Vector sqrt_eigs = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<Complex>();
  Matrix sqrt_rho = es.eigenvectors() * sqrt_eigs.asDiagonal() * es.eigenvectors().adjoint();
  Matrix b = sqrt_rho * spin_flip * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix> svd(b);
  const auto& lambdas = svd.singularValues();  // sorted decreasing
  return std::max(0.0, lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3));
}

RydbergModel::RydbergModel(double omega_, double interaction_)
    : omega(omega_), interaction(interaction_) {
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix n = 0.5 * (pauli_z() + id2);
  hamiltonian = omega * (kron(pauli_x(), id2) + kron(id2, pauli_x())) +
                interaction * kron(n, n);
  unitary = unitary_from_generator(hamiltonian);
}

DensityMatrix two_qubit_ground() {
  // sz |g> = -|g|>, i.e. the second basis vector of each qubit.
  return DensityMatrix::pure(kron(basis_state(2, 1), basis_state(2, 1)));
}

DensityMatrix two_qubit_excited() {
  return DensityMatrix::pure(kron(basis_state(2, 0), basis_state(2, 0)));
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw ParameterError("linspace: count must be >= 1");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int k = 0; k < count; ++k) grid[k] = lo + (hi - lo) * k / (count - 1);
  return grid;
}

Fig2Result fig2_batch(const Fig2Options& options) {
  Fig2Result result;
  result.processes.reserve(options.num_processes);
  const DensityMatrix reset = two_qubit_excited();
  for (int p = 0; p < options.num_processes; ++p) {
    Rng rng(derive_stream_seed(options.seed, static_cast<std::uint64_t>(p)));
    Matrix generator = random_hermitian(4, 0.75, rng);
    KrausChannel channel = KrausChannel::unitary(unitary_from_generator(generator));
    std::vector<double> rates(options.steps);
    for (double& r : rates) r = uniform_in(rng, 0.0, options.r_max);
    Matrix x = random_hermitian(4, 0.75, rng);
    ResetProcess process(channel, reset,
                         ResetSchedule(std::move(rates), ScheduleMode::classical));
    Fig2ProcessRecord record;
    record.schrodinger = trace_norm_series(process, x, options.steps);
    record.heisenberg = operator_norm_series(process, x, options.steps);
    result.schrodinger_events += record.schrodinger.positive_increments();
    result.heisenberg_events += record.heisenberg.positive_increments();
    result.processes.push_back(std::move(record));
  }
  return result;
}

namespace {

// Time-averaged concurrence along the reset-free unitary orbit; used for the
// r = 0 cells, which have no stationary state.
double time_averaged_concurrence(const KrausChannel& channel, const Matrix& rho0,
                                 int max_steps) {
  Matrix state = rho0;
  double acc = 0.0;
  for (int t = 1; t <= max_steps; ++t) {
    state = channel.apply(state);
    acc += concurrence(state);
  }
  return acc / max_steps;
}

}  // namespace

Fig3aResult fig3a_scan(const Fig3aOptions& options) {
  Fig3aResult result;
  result.v_grid = options.v_grid;
  result.r_grid = options.r_grid;
  result.cells.reserve(options.v_grid.size() * options.r_grid.size());
  const DensityMatrix reset = two_qubit_ground();

  for (double v : options.v_grid) {
    RydbergModel model(options.omega, v);
    KrausChannel channel = KrausChannel::unitary(model.unitary);
    double best = 0.0;
    double best_r = 0.0;
    bool any_converged = false;
    for (double r : options.r_grid) {
      Fig3aCell cell;
      cell.interaction = v;
      cell.reset_probability = r;
      if (r == 0.0) {
        cell.converged = false;
        cell.concurrence =
            time_averaged_concurrence(channel, reset.matrix(), options.max_steps);
      } else {
        ResetProcess process(channel, reset, ResetSchedule::constant(r, 1));
        StationaryResult stat = stationary_state(process, options.tol, options.max_steps);
        cell.converged = stat.converged;
        cell.concurrence = stat.converged
                               ? concurrence(stat.state)
                               : time_averaged_concurrence(channel, reset.matrix(),
                                                           options.max_steps);
        if (stat.converged && (!any_converged || cell.concurrence > best)) {
          best = cell.concurrence;
          best_r = r;
          any_converged = true;
        }
      }
      result.cells.push_back(cell);
    }
    result.max_concurrence_per_v.push_back(any_converged ? best : 0.0);
    result.argmax_r_per_v.push_back(any_converged ? best_r : 0.0);
  }
  return result;
}

Fig3bResult fig3b_schedule_run(const Fig3bOptions& options) {
  const int horizon = options.max_steps + options.window + 1;
  ResetSchedule schedule = options.kind == Fig3bScheduleKind::linear_ramp
                               ? ResetSchedule::ramp(1e-3, 0.08, horizon)
                               : ResetSchedule::cosine(horizon);
  RydbergModel model(options.omega, options.interaction);
  ResetProcess process(KrausChannel::unitary(model.unitary), two_qubit_ground(),
                       std::move(schedule));

  Fig3bResult result;
  RenewalPropagator walker(process, process.reset_state.matrix());
  result.concurrence.push_back(concurrence(walker.state()));
  Matrix previous = walker.state();

  const bool windowed = options.kind == Fig3bScheduleKind::cosine;
  for (int t = 1; t <= options.max_steps; ++t) {
    walker.advance();
    result.concurrence.push_back(concurrence(walker.state()));
    result.steps = t;
    if (windowed) {
      // Means of the last two disjoint windows of C(t).
      if (t >= 2 * options.window) {
        auto end = result.concurrence.end();
        double recent = std::accumulate(end - options.window, end, 0.0) / options.window;
        double older = std::accumulate(end - 2 * options.window, end - options.window, 0.0) /
                       options.window;
        if (std::abs(recent - older) < options.window_tol) {
          result.converged = true;
          result.stationary_concurrence = recent;
          return result;
        }
      }
    } else {
      double residual = trace_norm(walker.state() - previous);
      previous = walker.state();
      if (residual < options.tol) {
        result.converged = true;
        result.stationary_concurrence = result.concurrence.back();
        return result;
      }
    }
  }
  // Not converged: report the last value (ramp) or last-window mean (cosine).
  if (windowed && static_cast<int>(result.concurrence.size()) >= options.window) {
    auto end = result.concurrence.end();
    result.stationary_concurrence =
        std::accumulate(end - options.window, end, 0.0) / options.window;
  } else {
    result.stationary_concurrence = result.concurrence.back();
  }
  return result;
}

}  // namespace qreset
