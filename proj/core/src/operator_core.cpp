#include "tclprop/operator_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tclprop {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex v = a(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

ComplexMatrix identity(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("identity: dimension must be >= 1");
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "matmul");
  require_square(b, "matmul");
  if (a.rows() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix exp_diagonal(const ComplexMatrix& d) {
  require_square(d, "exp_diagonal");
  const double scale = d.norm();
  double offdiag_max = 0.0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (i != j) offdiag_max = std::max(offdiag_max, std::abs(d(i, j)));
  if (offdiag_max > 1e-14 * scale) {
    throw std::invalid_argument("exp_diagonal: input is not diagonal");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i) out(i, i) = std::exp(d(i, i));
  return out;
}

ComplexMatrix exp_hermitian(const ComplexMatrix& h, Complex scale) {
  require_square(h, "exp_hermitian");
  const double norm = h.norm();
  if ((h - h.adjoint()).norm() > 1e-12 * std::max(norm, 1e-300)) {
    throw std::invalid_argument("exp_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("exp_hermitian: eigendecomposition failed");
  }
  const Eigen::VectorXd& lam = es.eigenvalues();
  ComplexVector phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) phases(k) = std::exp(scale * lam(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace tclprop
