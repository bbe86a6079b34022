#include "qreset/witnesses.hpp"

#include <cmath>

namespace qreset {

std::vector<double> WitnessSeries::increments() const {
  std::vector<double> inc;
  if (values.size() < 2) return inc;
  inc.reserve(values.size() - 1);
  for (std::size_t k = 0; k + 1 < values.size(); ++k) inc.push_back(values[k + 1] - values[k]);
  return inc;
}

int WitnessSeries::positive_increments(double tol) const {
  int count = 0;
  for (double d : increments())
    if (d > tol) ++count;
  return count;
}

namespace {

void check_steps(const ResetProcess& process, int steps, const char* where) {
  if (steps < 0) throw ParameterError(std::string(where) + ": steps must be >= 0");
  if (steps > process.schedule.horizon())
    throw ParameterError(std::string(where) + ": steps exceed the schedule horizon");
}

template <typename Value>
WitnessSeries walk_series(const ResetProcess& process, int steps, Value&& value_of_map) {
  WitnessSeries series;
  series.times.reserve(steps + 1);
  series.values.reserve(steps + 1);
  DynamicalMapWalker walker(process);
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) walker.advance();
    series.times.push_back(t);
    series.values.push_back(value_of_map(walker));
  }
  return series;
}

}  // namespace

WitnessSeries trace_norm_series(const ResetProcess& process, const Matrix& x, int steps) {
  check_steps(process, steps, "trace_norm_series");
  if (hermiticity_defect(x) > kHermitianTol)
    throw ContractViolation("trace_norm_series: observable must be Hermitian");
  return walk_series(process, steps, [&x](const DynamicalMapWalker& walker) {
    return trace_norm(walker.map().apply(x));
  });
}

WitnessSeries operator_norm_series(const ResetProcess& process, const Matrix& x, int steps) {
  check_steps(process, steps, "operator_norm_series");
  if (hermiticity_defect(x) > kHermitianTol)
    throw ContractViolation("operator_norm_series: observable must be Hermitian");
  return walk_series(process, steps, [&x](const DynamicalMapWalker& walker) {
    return operator_norm(walker.dual().apply(x));
  });
}

WitnessSeries distinguishability_series(const ResetProcess& process, const DensityMatrix& rho1,
                                        const DensityMatrix& rho2, int steps) {
  check_steps(process, steps, "distinguishability_series");
  if (rho1.dim() != process.channel.dim() || rho2.dim() != process.channel.dim())
    throw DimensionError("distinguishability_series: state dimension mismatch");
  Matrix delta = rho1.matrix() - rho2.matrix();
  return walk_series(process, steps, [&delta](const DynamicalMapWalker& walker) {
    return 0.5 * trace_norm(walker.map().apply(delta));
  });
}

Superoperator intertwining_schrodinger(const ResetProcess& process, int t, int s,
                                       double cond_threshold) {
  if (!(0 <= s && s < t)) throw ParameterError("intertwining_schrodinger: need 0 <= s < t");
  Superoperator phi_t = dynamical_map(process, t);
  if (s == 0) return phi_t;
  Superoperator phi_s_inv = invert(dynamical_map(process, s), cond_threshold);
  return compose(phi_t, phi_s_inv);
}

Superoperator intertwining_heisenberg(const ResetProcess& process, int t, int s,
                                      double cond_threshold) {
  if (!(0 <= s && s < t)) throw ParameterError("intertwining_heisenberg: need 0 <= s < t");
  Superoperator dual_t = dual_dynamical_map(process, t);
  if (s == 0) return dual_t;
  Superoperator dual_s_inv = invert(dual_dynamical_map(process, s), cond_threshold);
  return compose(dual_t, dual_s_inv);
}

PositivityReport positivity_probe(const Superoperator& sop, int num_samples, Rng& rng) {
  PositivityReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int n = 0; n < num_samples; ++n) {
    Vector psi = haar_state(sop.dim, rng);
    Matrix input = psi * psi.adjoint();
    Matrix out = sop.apply(input);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (out + out.adjoint().eval()),
                                             Eigen::EigenvaluesOnly);
    double low = es.eigenvalues().minCoeff();
    if (low < report.min_eigenvalue) {
      report.min_eigenvalue = low;
      report.worst_input = std::move(input);
    }
  }
  report.negativity_found = report.min_eigenvalue < -1e-9;
  return report;
}

Matrix alternating_intertwining_image(const Matrix& u, const Vector& psi, double r, int t) {
  const int d = static_cast<int>(u.rows());
  if (u.rows() != u.cols() || psi.size() != d)
    throw DimensionError("alternating_intertwining_image: dimension mismatch");
  if (max_abs(u * u - Matrix::Identity(d, d)) > 1e-10)
    throw ContractViolation("alternating_intertwining_image: U^2 must equal identity");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw ContractViolation("alternating_intertwining_image: psi must be normalized");
  if (!(r > 0.0 && r < 1.0))
    throw ParameterError("alternating_intertwining_image: r must lie in (0, 1)");
  if (t < 1) throw ParameterError("alternating_intertwining_image: t must be >= 1");
  const double q = 1.0 - std::pow(1.0 - r, t);
  const double overlap = std::norm((psi.adjoint() * u * psi).value());
  Matrix projector = u.adjoint() * psi * psi.adjoint() * u;
  return projector - (q / (1.0 - q)) * (1.0 - overlap) * Matrix::Identity(d, d);
}

}  // namespace qreset
