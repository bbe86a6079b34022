#pragma once

#include <vector>

#include "qreset/renewal.hpp"

namespace qreset {

// Increments above this threshold count as genuine non-monotonicity events;
// double-precision roundoff at d <= 4 stays well below it.
inline constexpr double kWitnessTol = 1e-9;

struct WitnessSeries {
  std::vector<int> times;
  std::vector<double> values;

  // values[t+1] - values[t]; one entry shorter than values.
  std::vector<double> increments() const;
  int positive_increments(double tol = kWitnessTol) const;
};

// ||Phi(t)[X]||_1 for Hermitian X, t = 0..steps. A positive increment
// witnesses a non-positive intertwining map Lambda(t+1, t), i.e. Phi is not
// P-divisible.
WitnessSeries trace_norm_series(const ResetProcess& process, const Matrix& x, int steps);

// ||Phi*(t)[X]|| in the Heisenberg picture; positive increments witness
// non-positive Psi(t+1, t).
WitnessSeries operator_norm_series(const ResetProcess& process, const Matrix& x, int steps);

// D(t) = ||Phi(t)[rho1 - rho2]||_1 / 2; revivals signal information backflow.
WitnessSeries distinguishability_series(const ResetProcess& process, const DensityMatrix& rho1,
                                        const DensityMatrix& rho2, int steps);

// Lambda(t, s) = Phi(t) o Phi(s)^-1 with Lambda(t,s) Phi(s) = Phi(t).
Superoperator intertwining_schrodinger(const ResetProcess& process, int t, int s,
                                       double cond_threshold = 1e12);

// Psi(t, s) = Phi*(t) o [Phi*(s)]^-1 with Psi(t,s) Phi*(s) = Phi*(t);
// in general different from the adjoint of Lambda(t, s).
Superoperator intertwining_heisenberg(const ResetProcess& process, int t, int s,
                                      double cond_threshold = 1e12);

struct PositivityReport {
  double min_eigenvalue = 0.0;   // most negative output eigenvalue seen
  Matrix worst_input;            // projector achieving it
  bool negativity_found = false; // min below -1e-9 certifies non-positivity
};

// One-sided witness: applies the map to Haar-random rank-1 projectors. A
// strictly negative minimum certifies the map is not positive; a nonnegative
// minimum is inconclusive.
PositivityReport positivity_probe(const Superoperator& sop, int num_samples, Rng& rng);

// Closed-form image of |psi><psi| under the one-step Heisenberg intertwining
// map Psi(2t+1, 2t) of the alternating process (reset probability r on even
// steps, unitary U with U^2 = 1 in between):
//   U^dagger |psi><psi| U - q/(1-q) (1 - |<psi|U|psi>|^2) 1,
// with q = 1 - (1-r)^t. Non-positive for every t >= 1 when |<psi|U|psi>| < 1.
Matrix alternating_intertwining_image(const Matrix& u, const Vector& psi, double r, int t);

}  // namespace qreset
