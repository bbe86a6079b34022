#include "qreset/channels.hpp"

#include <cmath>
#include <utility>

namespace qreset {

Vector vec(const Matrix& x) {
  const Eigen::Index d = x.rows();
  Vector v(d * x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) v.segment(j * d, d) = x.col(j);
  return v;
}

Matrix unvec(const Vector& v, int dim) {
  if (v.size() != Eigen::Index(dim) * dim)
    throw DimensionError("unvec: vector length is not dim^2");
  Matrix x(dim, dim);
  for (int j = 0; j < dim; ++j) x.col(j) = v.segment(j * dim, dim);
  return x;
}

KrausChannel::KrausChannel(std::vector<Matrix> ops, double completeness_tol)
    : ops_(std::move(ops)) {
  if (ops_.empty()) throw ParameterError("KrausChannel: at least one Kraus operator required");
  dim_ = static_cast<int>(ops_.front().rows());
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_)
      throw DimensionError("KrausChannel: Kraus operators must be square with equal dims");
    sum += k.adjoint() * k;
  }
  if (max_abs(sum - Matrix::Identity(dim_, dim_)) > completeness_tol)
    throw ContractViolation("KrausChannel: sum K^dagger K differs from identity");
}

KrausChannel KrausChannel::unitary(Matrix u) {
  std::vector<Matrix> ops;
  ops.push_back(std::move(u));
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::identity(int dim) {
  return unitary(Matrix::Identity(dim, dim));
}

Matrix KrausChannel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw DimensionError("KrausChannel::apply: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : ops_) out += k * rho * k.adjoint();
  return out;
}

Matrix KrausChannel::apply_dual(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw DimensionError("KrausChannel::apply_dual: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : ops_) out += k.adjoint() * x * k;
  return out;
}

KrausChannel reset_projector(const DensityMatrix& reset_state) {
  const int d = reset_state.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(reset_state.matrix());
  std::vector<Matrix> ops;
  for (int k = 0; k < d; ++k) {
    double rk = es.eigenvalues()(k);
    if (rk < 1e-14) continue;
    Vector rvec = es.eigenvectors().col(k);
    for (int m = 0; m < d; ++m) {
      ops.push_back(std::sqrt(rk) * rvec * basis_state(d, m).adjoint());
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_kraus_channel(int dim, int num_ops, Rng& rng) {
  if (num_ops < 1) throw ParameterError("random_kraus_channel: num_ops must be >= 1");
  Matrix g(dim * num_ops, dim);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = complex_normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix iso = qr.householderQ() * Matrix::Identity(dim * num_ops, dim);
  std::vector<Matrix> ops;
  ops.reserve(num_ops);
  for (int mu = 0; mu < num_ops; ++mu) ops.push_back(iso.block(mu * dim, 0, dim, dim));
  return KrausChannel(std::move(ops));
}

Superoperator Superoperator::identity_map(int dim) {
  return {dim, Matrix::Identity(Eigen::Index(dim) * dim, Eigen::Index(dim) * dim)};
}

Matrix Superoperator::apply(const Matrix& x) const {
  if (x.rows() != dim || x.cols() != dim)
    throw DimensionError("Superoperator::apply: dimension mismatch");
  return unvec(mat * vec(x), dim);
}

Superoperator to_superoperator(const KrausChannel& channel) {
  const int d = channel.dim();
  Matrix m = Matrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
  for (const Matrix& k : channel.ops()) m += kron(k.conjugate(), k);
  return {d, std::move(m)};
}

Superoperator compose(const Superoperator& a, const Superoperator& b) {
  if (a.dim != b.dim) throw DimensionError("compose: dimension mismatch");
  return {a.dim, a.mat * b.mat};
}

Superoperator invert(const Superoperator& sop, double cond_threshold) {
  Eigen::JacobiSVD<Matrix> svd(sop.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  double cond = (smin > 0.0) ? sv(0) / smin : std::numeric_limits<double>::infinity();
  if (!(cond < cond_threshold))
    throw NonInvertibleError("invert: condition number above threshold", cond);
  Vector inv_sv = sv.cwiseInverse().cast<Complex>();
  return {sop.dim, svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint()};
}

Matrix choi_matrix(const Superoperator& sop) {
  const int d = sop.dim;
  // C[(m,i),(n,j)] = map(|i><j|)[m,n] = M[(n,m),(j,i)] with (x,y) = x*d + y.
  Matrix c(Eigen::Index(d) * d, Eigen::Index(d) * d);
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int n = 0; n < d; ++n)
        for (int j = 0; j < d; ++j)
          c(m * d + i, n * d + j) = sop.mat(n * d + m, j * d + i);
  return c;
}

CptpReport is_cptp(const Superoperator& sop, double tol) {
  CptpReport report;
  Matrix c = choi_matrix(sop);
  report.choi_hermiticity_defect = hermiticity_defect(c);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (c + c.adjoint().eval()),
                                           Eigen::EigenvaluesOnly);
  report.min_choi_eigenvalue = es.eigenvalues().minCoeff();
  Vector vec_id = vec(Matrix::Identity(sop.dim, sop.dim));
  report.trace_defect = (sop.mat.adjoint() * vec_id - vec_id).cwiseAbs().maxCoeff();
  report.cptp = report.min_choi_eigenvalue >= -tol && report.trace_defect <= tol &&
                report.choi_hermiticity_defect <= tol;
  return report;
}

CptpReport is_cptp(const KrausChannel& channel, double tol) {
  return is_cptp(to_superoperator(channel), tol);
}

}  // namespace qreset
