#pragma once

#include <vector>

#include "qreset/linalg.hpp"

namespace qreset {

// Column-stacking vectorization, fixed artifact-wide:
// vec(A X B) = (B^T kron A) vec(X).
Vector vec(const Matrix& x);
Matrix unvec(const Vector& v, int dim);

// ---------------------------------------------------------------------------
// Kraus channels
// ---------------------------------------------------------------------------

// CPTP map X -> sum_mu K_mu X K_mu^dagger. Construction verifies the
// completeness relation sum_mu K_mu^dagger K_mu = 1 within `completeness_tol`.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops, double completeness_tol = 1e-10);

  static KrausChannel unitary(Matrix u);
  static KrausChannel identity(int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<Matrix>& ops() const noexcept { return ops_; }

  // Schroedinger action sum_mu K_mu rho K_mu^dagger.
  Matrix apply(const Matrix& rho) const;
  // Heisenberg (dual) action sum_mu K_mu^dagger X K_mu; unital.
  Matrix apply_dual(const Matrix& x) const;

 private:
  int dim_;
  std::vector<Matrix> ops_;
};

// Kraus form of the reset projector P[X] = Tr(X) rho_reset, built from the
// eigenpairs of the reset state. Eigenvalues below 1e-14 are dropped so
// numerical zeros do not create spurious Kraus operators.
KrausChannel reset_projector(const DensityMatrix& reset_state);

// Random channel with `num_ops` Kraus operators, obtained by slicing a Haar
// isometry; satisfies the completeness relation by construction.
KrausChannel random_kraus_channel(int dim, int num_ops, Rng& rng);

// ---------------------------------------------------------------------------
// Superoperators
// ---------------------------------------------------------------------------

// Matrix representation of a linear map on operators: a d^2 x d^2 matrix M
// with M vec(X) = vec(map[X]) in the column-stacking convention.
struct Superoperator {
  int dim = 0;  // Hilbert-space dimension d
  Matrix mat;   // d^2 x d^2

  static Superoperator identity_map(int dim);

  // Superoperator of the dual map (conjugate transpose in this convention).
  Superoperator adjoint() const { return {dim, mat.adjoint()}; }

  Matrix apply(const Matrix& x) const;
};

// M = sum_mu conj(K_mu) kron K_mu.
Superoperator to_superoperator(const KrausChannel& channel);

// a after b (matrix product a.mat * b.mat).
Superoperator compose(const Superoperator& a, const Superoperator& b);

// Matrix inverse, guarded by a condition-number gate; throws
// NonInvertibleError (carrying the condition estimate) beyond the threshold.
Superoperator invert(const Superoperator& sop, double cond_threshold = 1e12);

// Choi matrix C = (map kron id) applied to sum_ij |ii><jj|; the map is
// completely positive iff C >= 0.
Matrix choi_matrix(const Superoperator& sop);

struct CptpReport {
  bool cptp = false;
  double min_choi_eigenvalue = 0.0;
  double trace_defect = 0.0;       // max |M^dagger vec(1) - vec(1)|
  double choi_hermiticity_defect = 0.0;
};

CptpReport is_cptp(const Superoperator& sop, double tol = 1e-10);
CptpReport is_cptp(const KrausChannel& channel, double tol = 1e-10);

}  // namespace qreset
