#include "qreset/linalg.hpp"

#include <cmath>
#include <numbers>

namespace qreset {

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Vector basis_state(int dim, int k) {
  if (k < 0 || k >= dim) throw ParameterError("basis_state: index out of range");
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

bool all_finite(const Matrix& x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!std::isfinite(x(i, j).real()) || !std::isfinite(x(i, j).imag())) return false;
  return true;
}

double max_abs(const Matrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& x) {
  return max_abs(x - x.adjoint().eval());
}

namespace {

void require_square(const Matrix& x, const char* where) {
  if (x.rows() != x.cols())
    throw DimensionError(std::string(where) + ": matrix must be square");
}

}  // namespace

double trace_norm(const Matrix& x) {
  require_square(x, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues().sum();
}

double operator_norm(const Matrix& x) {
  require_square(x, "operator_norm");
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.adjoint() * x, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

double min_eigenvalue_hermitian(const Matrix& x, double herm_tol) {
  require_square(x, "min_eigenvalue_hermitian");
  if (hermiticity_defect(x) > herm_tol)
    throw ContractViolation("min_eigenvalue_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  Matrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

Matrix unitary_from_generator(const Matrix& g, double herm_tol) {
  require_square(g, "unitary_from_generator");
  if (hermiticity_defect(g) > herm_tol)
    throw ContractViolation("unitary_from_generator: generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  Vector phases = (Complex(0, -1) * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

double standard_normal(Rng& rng) {
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  double u1 = 1.0 - uniform_unit(rng);
  double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex complex_normal(Rng& rng) {
  double re = standard_normal(rng);
  double im = standard_normal(rng);
  return {re, im};
}

Matrix random_hermitian(int dim, double density, Rng& rng) {
  if (dim < 1) throw ParameterError("random_hermitian: dim must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw ParameterError("random_hermitian: density must lie in [0, 1]");
  Matrix a = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      bool keep = uniform_unit(rng) < density;
      if (keep) a(i, j) = Complex(uniform_in(rng, -1.0, 1.0), uniform_in(rng, -1.0, 1.0));
    }
  }
  return 0.5 * (a + a.adjoint().eval());
}

Matrix haar_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = complex_normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so Q is Haar-distributed.
  for (int k = 0; k < dim; ++k) {
    Complex d = r(k, k);
    double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : Complex(1, 0);
  }
  return q;
}

Matrix random_hermitian_unitary(int dim, Rng& rng) {
  Matrix v = haar_unitary(dim, rng);
  Vector signs(dim);
  for (int k = 0; k < dim; ++k) signs(k) = (uniform_unit(rng) < 0.5) ? -1.0 : 1.0;
  return v * signs.asDiagonal() * v.adjoint();
}

Vector haar_state(int dim, Rng& rng) {
  Vector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = complex_normal(rng);
  return v / v.norm();
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("DensityMatrix: matrix must be square");
  if (!all_finite(m_)) throw ContractViolation("DensityMatrix: entries must be finite");
  if (hermiticity_defect(m_) > 1e-12)
    throw ContractViolation("DensityMatrix: matrix is not Hermitian within 1e-12");
  if (std::abs(m_.trace() - Complex(1, 0)) > 1e-12)
    throw ContractViolation("DensityMatrix: trace differs from 1 by more than 1e-12");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m_ + m_.adjoint().eval()),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw ContractViolation("DensityMatrix: smallest eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  double n = psi.norm();
  if (n == 0.0) throw ParameterError("DensityMatrix::pure: zero vector");
  Vector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::random(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = complex_normal(rng);
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  // Symmetrize away the last bits of roundoff.
  return DensityMatrix(0.5 * (w + w.adjoint().eval()));
}

}  // namespace qreset
