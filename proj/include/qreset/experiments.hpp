#pragma once

#include <cstdint>
#include <vector>

#include "qreset/trajectories.hpp"
#include "qreset/witnesses.hpp"

namespace qreset {

// Wootters two-qubit concurrence: C = max{0, l1 - l2 - l3 - l4} with l_i the
// decreasing square roots of the eigenvalues of
// rho (sy kron sy) conj(rho) (sy kron sy).
double concurrence(const Matrix& rho);

// Two driven qubits with density-density interaction,
// H = Omega (sx kron 1 + 1 kron sx) + V n kron n, n = (sz + 1)/2,
// evolved by the single-step unitary U = exp(-i H).
struct RydbergModel {
  double omega;
  double interaction;
  Matrix hamiltonian;
  Matrix unitary;

  RydbergModel(double omega, double interaction);
};

// Two-qubit product state |g g> with sz |g> = -|g> (zero excitations).
DensityMatrix two_qubit_ground();
// Two-qubit product state of sz = +1 eigenstates.
DensityMatrix two_qubit_excited();

std::vector<double> linspace(double lo, double hi, int count);

// ---------------------------------------------------------------------------
// Random-process witness batch
// ---------------------------------------------------------------------------

struct Fig2Options {
  int num_processes = 100;
  int steps = 100;
  double r_max = 0.1;
  std::uint64_t seed = 0;
};

struct Fig2ProcessRecord {
  WitnessSeries schrodinger;  // trace norm of Phi(t)[X]
  WitnessSeries heisenberg;   // operator norm of Phi*(t)[X]
};

struct Fig2Result {
  std::vector<Fig2ProcessRecord> processes;
  int schrodinger_events = 0;  // positive increments across the batch
  int heisenberg_events = 0;
};

// For each process: random Hermitian generator G (two qubits, density 0.75),
// unitary channel U = exp(-iG), reset to the sz = +1 product state, schedule
// r(s) uniform in [0, r_max], witness operator a random Hermitian X.
Fig2Result fig2_batch(const Fig2Options& options);

// ---------------------------------------------------------------------------
// Stationary concurrence under constant-r resetting
// ---------------------------------------------------------------------------

struct Fig3aOptions {
  double omega = 3.0;
  std::vector<double> v_grid = linspace(0.0, 4.0, 41);
  std::vector<double> r_grid = linspace(0.0, 1.0, 101);
  double tol = 1e-10;
  int max_steps = 10000;
};

struct Fig3aCell {
  double interaction = 0.0;
  double reset_probability = 0.0;
  double concurrence = 0.0;
  bool converged = false;  // false entries report a time-averaged value
};

struct Fig3aResult {
  std::vector<double> v_grid;
  std::vector<double> r_grid;
  std::vector<Fig3aCell> cells;  // v-major, then r
  std::vector<double> max_concurrence_per_v;  // over converged cells
  std::vector<double> argmax_r_per_v;

  const Fig3aCell& cell(int v_index, int r_index) const {
    return cells[static_cast<std::size_t>(v_index) * r_grid.size() + r_index];
  }
};

Fig3aResult fig3a_scan(const Fig3aOptions& options);

// ---------------------------------------------------------------------------
// Time-dependent schedules
// ---------------------------------------------------------------------------

enum class Fig3bScheduleKind { linear_ramp, cosine };

struct Fig3bOptions {
  double omega = 3.0;
  double interaction = 1.0;
  Fig3bScheduleKind kind = Fig3bScheduleKind::linear_ramp;
  double tol = 1e-10;
  int max_steps = 10000;
  // The cosine schedule is aperiodic in integer time, so stationarity is
  // declared when consecutive 50-step windows of the concurrence series have
  // means within window_tol.
  int window = 50;
  double window_tol = 1e-8;
};

struct Fig3bResult {
  std::vector<double> concurrence;  // C(t), t = 0..steps
  double stationary_concurrence = 0.0;
  bool converged = false;
  int steps = 0;
};

// Runs the renewal propagator with the requested time-dependent schedule
// (linear ramp r(t) = min{0.08, 1e-3 (t-1)} or cosine r(t) = [1-cos(t-1)]/2)
// from the two-qubit ground reset state to (windowed) stationarity.
Fig3bResult fig3b_schedule_run(const Fig3bOptions& options);

}  // namespace qreset
