#pragma once

#include <cstdint>
#include <vector>

#include "qreset/renewal.hpp"

namespace qreset {

// One stochastic realization of the reset process.
struct Trajectory {
  std::vector<int> reset_times;  // strictly increasing, within [1, steps]
  std::vector<Matrix> states;    // rho(0..steps)
  std::uint64_t seed = 0;        // stream seed that produced this realization
};

// Samples a single realization: at each step the state resets to rho_reset
// with probability r(elapsed) (elapsed = steps since the last reset, counted
// from 0 at t = 0 so the first opportunity uses r(1)), otherwise the channel
// is applied. Classical schedules only.
Trajectory sample_trajectory(const ResetProcess& process, const DensityMatrix& rho0,
                             int steps, Rng& rng);

struct EnsembleResult {
  std::vector<Matrix> mean;                      // rho(0..steps), averaged
  std::vector<Eigen::MatrixXd> standard_error;   // combined re/im SE per entry
  int samples = 0;
};

// Entry-wise mean of `num_samples` trajectories with per-entry standard
// errors. Per-trajectory streams are derived from (master_seed, index), and
// accumulation is fixed in index order, so the result is deterministic
// regardless of how the work would be scheduled.
EnsembleResult ensemble_average(const ResetProcess& process, const DensityMatrix& rho0,
                                int steps, int num_samples, std::uint64_t master_seed);

}  // namespace qreset
