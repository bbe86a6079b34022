#pragma once

// Test-only oracles, independent of the library implementation paths they
// cross-check.

#include <cmath>
#include <vector>

#include "qreset/renewal.hpp"

namespace qreset::testing {

// Sum of |eigenvalues| of a Hermitian matrix via Eigen's self-adjoint solver
// (the library computes trace norms from an SVD instead).
inline double hermitian_abs_eigenvalue_sum(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// Largest singular value via a full SVD (the library goes through X^dagger X).
inline double svd_operator_norm(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues()(0);
}

// Eigenvalues of a 2x2 Hermitian matrix from the quadratic formula.
inline std::pair<double, double> hermitian2x2_eigenvalues(const Matrix& x) {
  double a = x(0, 0).real();
  double c = x(1, 1).real();
  double disc = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(x(0, 1)));
  return {0.5 * (a + c) - disc, 0.5 * (a + c) + disc};
}

// exp(-i g) by scaling and squaring a plain Taylor series.
inline Matrix taylor_exp_minus_i(const Matrix& g, int scaling_power = 20) {
  const Eigen::Index d = g.rows();
  Matrix m = Complex(0, -1) * g / std::pow(2.0, scaling_power);
  Matrix term = Matrix::Identity(d, d);
  Matrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = term * m / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int k = 0; k < scaling_power; ++k) sum = sum * sum;
  return sum;
}

// Exact ensemble average by enumerating every reset/no-reset pattern of
// length `steps`, weighting each path by its probability. Classical
// schedules only. Returns rho(0..steps).
inline std::vector<Matrix> enumerate_reset_average(const KrausChannel& channel,
                                                   const Matrix& reset_state,
                                                   const ResetSchedule& schedule,
                                                   const Matrix& rho0, int steps) {
  const int d = static_cast<int>(rho0.rows());
  std::vector<Matrix> average(steps + 1, Matrix::Zero(d, d));
  average[0] = rho0;
  const std::uint64_t patterns = std::uint64_t(1) << steps;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double probability = 1.0;
    Matrix state = rho0;
    int last_reset = 0;
    for (int t = 1; t <= steps; ++t) {
      double hazard = schedule.rate(t - last_reset);
      if (mask & (std::uint64_t(1) << (t - 1))) {
        probability *= hazard;
        state = reset_state;
        last_reset = t;
      } else {
        probability *= 1.0 - hazard;
        state = channel.apply(state);
      }
      average[t] += probability * state;
    }
  }
  // Each prefix is counted once per suffix; divide by the number of suffixes.
  for (int t = 1; t <= steps; ++t) average[t] /= double(std::uint64_t(1) << (steps - t));
  return average;
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qreset::testing
