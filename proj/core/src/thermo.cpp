#include "tclprop/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"

namespace tclprop {

namespace {

void require_hermitian(const ComplexMatrix& h, const char* what) {
  require_square(h, what);
  if ((h - h.adjoint()).norm() > 1e-12 * std::max(h.norm(), 1e-300)) {
    throw std::invalid_argument(std::string(what) + ": Hamiltonian must be Hermitian");
  }
}

void require_beta(double beta, const char* what) {
  if (beta < 0.0) throw std::invalid_argument(std::string(what) + ": beta must be >= 0");
}

Eigen::VectorXd hermitian_spectrum(const ComplexMatrix& h) {
  // Real-symmetric matrices (the XY chain) take the cheaper real solver.
  if (h.imag().norm() <= 1e-14 * std::max(h.norm(), 1e-300)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double z_from_spectrum(const Eigen::VectorXd& lam, double beta) {
  double z = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) z += std::exp(-beta * lam(k));
  return z;
}

void require_zero_diagonal(const ComplexMatrix& h, const char* what) {
  if (project_diag(h).norm() > 1e-13 * std::max(1.0, h.norm())) {
    throw std::invalid_argument(std::string(what) +
                                ": Hamiltonian must have zero diagonal (the simplified "
                                "second-order formula assumes P H = 0)");
  }
}

} // namespace

double z_exact(const ComplexMatrix& h, double beta) {
  require_hermitian(h, "z_exact");
  require_beta(beta, "z_exact");
  return z_from_spectrum(hermitian_spectrum(h), beta);
}

double z_tcl2(const ComplexMatrix& h, double beta) {
  require_hermitian(h, "z_tcl2");
  require_beta(beta, "z_tcl2");
  require_zero_diagonal(h, "z_tcl2");
  double z = 0.0;
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    const double h2_kk = h.row(k).squaredNorm(); // (H^2)_kk for Hermitian H
    z += std::exp(0.5 * beta * beta * h2_kk);
  }
  return z;
}

double z_dyson2(const ComplexMatrix& h, double beta) {
  require_hermitian(h, "z_dyson2");
  require_beta(beta, "z_dyson2");
  require_zero_diagonal(h, "z_dyson2");
  return static_cast<double>(h.rows()) + 0.5 * beta * beta * h.squaredNorm();
}

double z_closed_form_tcl_n10(double a_beta) {
  const double x = a_beta * a_beta;
  return 8.0 * std::exp(2.5 * x) * std::cosh(0.5 * x) *
         (44.0 * std::cosh(x) + std::cosh(2.0 * x) + 83.0);
}

double z_closed_form_dyson_n10(double a_beta) { return 1024.0 + 2560.0 * a_beta * a_beta; }

std::vector<PartitionResult> partition_sweep(const XYChainParams& p,
                                             const std::vector<double>& a_beta_grid) {
  p.validate();
  for (double ab : a_beta_grid) {
    if (ab < 0.0) throw std::invalid_argument("partition_sweep: a_beta grid values must be >= 0");
  }
  if (p.coupling <= 0.0) {
    throw std::invalid_argument("partition_sweep: coupling must be positive");
  }
  const ComplexMatrix h = xy_hamiltonian(p);
  const Eigen::VectorXd lam = hermitian_spectrum(h);
  std::vector<PartitionResult> out;
  out.reserve(a_beta_grid.size());
  for (double ab : a_beta_grid) {
    const double beta = ab / p.coupling;
    PartitionResult r;
    r.a_beta = ab;
    r.z_exact = z_from_spectrum(lam, beta);
    r.z_tcl2 = z_tcl2(h, beta);
    r.z_dyson2 = z_dyson2(h, beta);
    r.z_average = 0.5 * (r.z_tcl2 + r.z_dyson2);
    out.push_back(r);
  }
  return out;
}

} // namespace tclprop
