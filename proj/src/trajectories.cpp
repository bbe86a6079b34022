#include "qreset/trajectories.hpp"

#include <cmath>

namespace qreset {

Trajectory sample_trajectory(const ResetProcess& process, const DensityMatrix& rho0,
                             int steps, Rng& rng) {
  if (process.schedule.mode() != ScheduleMode::classical)
    throw UnsupportedError(
        "sample_trajectory: negative probabilities have no trajectory interpretation");
  if (steps < 0) throw ParameterError("sample_trajectory: steps must be >= 0");
  if (rho0.dim() != process.channel.dim())
    throw DimensionError("sample_trajectory: state dimension mismatch");

  Trajectory trajectory;
  trajectory.states.reserve(steps + 1);
  trajectory.states.push_back(rho0.matrix());
  int last_reset = 0;
  for (int t = 1; t <= steps; ++t) {
    double hazard = process.schedule.rate(t - last_reset);
    if (uniform_unit(rng) < hazard) {
      trajectory.states.push_back(process.reset_state.matrix());
      trajectory.reset_times.push_back(t);
      last_reset = t;
    } else {
      trajectory.states.push_back(process.channel.apply(trajectory.states.back()));
    }
  }
  return trajectory;
}

EnsembleResult ensemble_average(const ResetProcess& process, const DensityMatrix& rho0,
                                int steps, int num_samples, std::uint64_t master_seed) {
  if (num_samples < 1) throw ParameterError("ensemble_average: need at least one sample");
  const int d = process.channel.dim();

  std::vector<Matrix> sum(steps + 1, Matrix::Zero(d, d));
  std::vector<Eigen::MatrixXd> sum_sq_re(steps + 1, Eigen::MatrixXd::Zero(d, d));
  std::vector<Eigen::MatrixXd> sum_sq_im(steps + 1, Eigen::MatrixXd::Zero(d, d));

  for (int n = 0; n < num_samples; ++n) {
    Rng rng(derive_stream_seed(master_seed, static_cast<std::uint64_t>(n)));
    Trajectory trajectory = sample_trajectory(process, rho0, steps, rng);
    for (int t = 0; t <= steps; ++t) {
      const Matrix& state = trajectory.states[t];
      sum[t] += state;
      sum_sq_re[t] += state.real().cwiseProduct(state.real());
      sum_sq_im[t] += state.imag().cwiseProduct(state.imag());
    }
  }

  EnsembleResult result;
  result.samples = num_samples;
  result.mean.reserve(steps + 1);
  result.standard_error.reserve(steps + 1);
  const double n = static_cast<double>(num_samples);
  for (int t = 0; t <= steps; ++t) {
    Matrix mean = sum[t] / n;
    Eigen::MatrixXd se = Eigen::MatrixXd::Zero(d, d);
    if (num_samples > 1) {
      // Unbiased variance per entry, real and imaginary parts combined.
      Eigen::MatrixXd var_re =
          (sum_sq_re[t] / n - mean.real().cwiseProduct(mean.real())) * (n / (n - 1.0));
      Eigen::MatrixXd var_im =
          (sum_sq_im[t] / n - mean.imag().cwiseProduct(mean.imag())) * (n / (n - 1.0));
      se = ((var_re.cwiseMax(0.0) + var_im.cwiseMax(0.0)) / n).cwiseSqrt();
    }
    result.mean.push_back(std::move(mean));
    result.standard_error.push_back(std::move(se));
  }
  return result;
}

}  // namespace qreset
