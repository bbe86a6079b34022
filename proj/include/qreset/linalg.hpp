#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "qreset/errors.hpp"

namespace qreset {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// One generator instance per thread of use; streams for parallel work are
// derived from a master seed with derive_stream_seed.
using Rng = std::mt19937_64;

inline constexpr double kHermitianTol = 1e-10;

// ---------------------------------------------------------------------------
// Elementary constructions
// ---------------------------------------------------------------------------

Matrix identity(int dim);
Vector basis_state(int dim, int k);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

bool all_finite(const Matrix& x);
double max_abs(const Matrix& x);
// max |X - X^dagger| over entries; 0 for exactly Hermitian X.
double hermiticity_defect(const Matrix& x);

// ---------------------------------------------------------------------------
// Norms and spectra
// ---------------------------------------------------------------------------

// Sum of singular values (computed by SVD, also for Hermitian input).
double trace_norm(const Matrix& x);
// Largest singular value, via the spectrum of X^dagger X.
double operator_norm(const Matrix& x);
// Smallest eigenvalue of a Hermitian matrix; rejects non-Hermitian input.
double min_eigenvalue_hermitian(const Matrix& x, double herm_tol = kHermitianTol);

// ---------------------------------------------------------------------------
// Products and exponentials
// ---------------------------------------------------------------------------

// Kronecker product: (A kron B)[i*dB+k, j*dB+l] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

// U = exp(-i G) for a Hermitian generator G, via eigendecomposition.
Matrix unitary_from_generator(const Matrix& g, double herm_tol = kHermitianTol);

// ---------------------------------------------------------------------------
// Seeded random generation
// ---------------------------------------------------------------------------

// Independent sub-stream seed (splitmix64 step); the same (master, index)
// pair always yields the same stream, so serial and parallel execution agree.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

double uniform_unit(Rng& rng);  // [0, 1)
double uniform_in(Rng& rng, double lo, double hi);
double standard_normal(Rng& rng);
Complex complex_normal(Rng& rng);

// Random Hermitian matrix: entries of A drawn uniformly from [-1,1] (real and
// imaginary part), kept with probability `density`, then (A + A^dagger)/2.
Matrix random_hermitian(int dim, double density, Rng& rng);

Matrix haar_unitary(int dim, Rng& rng);
// U = V diag(+-1) V^dagger with Haar V: Hermitian and unitary, U^2 = 1.
Matrix random_hermitian_unitary(int dim, Rng& rng);
// Normalized vector of independent standard complex Gaussians.
Vector haar_state(int dim, Rng& rng);

// ---------------------------------------------------------------------------
// Validated quantum state
// ---------------------------------------------------------------------------

// Square matrix checked at construction to be Hermitian (1e-12), unit trace
// (1e-12) and positive semidefinite (smallest eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  static DensityMatrix pure(const Vector& psi);  // normalizes psi
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix random(int dim, Rng& rng);  // Wishart-normalized

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

 private:
  Matrix m_;
};

}  // namespace qreset
