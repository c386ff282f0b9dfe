#include "tclprop/models.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"

namespace tclprop {

namespace {

constexpr Eigen::Index kDimensionCap = 4096;

double detuning_of(int i, const LambdaParams& p) {
  if (i == 1) return p.detuning1;
  if (i == 2) return p.detuning2;
  throw std::invalid_argument("lambda coefficient: field index must be 1 or 2");
}

double rabi_of(int i, const LambdaParams& p) { return i == 1 ? p.rabi1 : p.rabi2; }

// exp(i w t) integrated over [t0, t].
Complex phase_integral(double w, double t, double t0) {
  return (std::exp(kI * w * t) - std::exp(kI * w * t0)) / (kI * w);
}

} // namespace

TimeDependentHamiltonian constant_hamiltonian(const ComplexMatrix& h) {
  require_square(h, "constant_hamiltonian");
  if (!all_finite(h)) throw std::invalid_argument("constant_hamiltonian: non-finite entries");
  const bool zero_diag = project_diag(h).norm() <= 1e-13 * std::max(1.0, h.norm());
  auto stored = std::make_shared<ComplexMatrix>(h);
  return {h.rows(), [stored](double) { return *stored; }, zero_diag};
}

void LambdaParams::validate() const {
  if (detuning1 == 0.0 || detuning2 == 0.0) {
    throw std::invalid_argument("LambdaParams: detunings must be nonzero");
  }
}

TimeDependentHamiltonian lambda_hamiltonian(const LambdaParams& p) {
  p.validate();
  return {3,
          [p](double t) {
            ComplexMatrix h = ComplexMatrix::Zero(3, 3);
            const Complex o1 = p.rabi1 * std::exp(kI * p.detuning1 * t);
            const Complex o2 = p.rabi2 * std::exp(kI * p.detuning2 * t);
            h(2, 1) = o1;
            h(2, 0) = o2;
            h(1, 2) = std::conj(o1);
            h(0, 2) = std::conj(o2);
            return h;
          },
          true};
}

Complex lambda_h(int i, double t, double t0, const LambdaParams& p) {
  p.validate();
  const double w = detuning_of(i, p);
  const double omega = rabi_of(i, p);
  return -kI * omega * (std::exp(kI * t * w) - std::exp(kI * t0 * w)) / w;
}

Complex lambda_f(int i, double t, double t0, const LambdaParams& p) {
  p.validate();
  const double w = detuning_of(i, p);
  const double omega = rabi_of(i, p);
  const double tau = t - t0;
  // Inner integral in closed form, then the outer one; elementary exponentials.
  return -omega * omega *
         ((1.0 - std::exp(-kI * tau * w)) / (w * w) - kI * tau / w);
}

Complex lambda_g(double t, double t0, const LambdaParams& p) {
  p.validate();
  const double w1 = p.detuning1;
  const double w2 = p.detuning2;
  Complex outer1;
  if (std::abs(w1 - w2) <= 1e-12 * std::max(std::abs(w1), std::abs(w2))) {
    outer1 = t - t0; // degenerate detunings: the phase cancels
  } else {
    outer1 = phase_integral(w2 - w1, t, t0);
  }
  const Complex outer2 =
      std::exp(kI * t0 * w2) * (std::exp(-kI * t0 * w1) - std::exp(-kI * t * w1)) / (kI * w1);
  return (outer1 - outer2) / (kI * w2);
}

void XYChainParams::validate() const {
  if (sites < 3) {
    throw std::invalid_argument("XYChainParams: need at least 3 sites (periodic N=2 double-counts the bond)");
  }
  if ((Eigen::Index{1} << sites) > kDimensionCap) {
    throw std::invalid_argument("XYChainParams: Hilbert dimension exceeds the 4096 cap");
  }
}

namespace {

// Kronecker chain with `op_a` at site a and `op_b` at site b (0-based),
// identity elsewhere; site 0 is the most significant factor.
ComplexMatrix two_site_operator(int sites, int a, const ComplexMatrix& op_a, int b,
                                const ComplexMatrix& op_b) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix eye2 = ComplexMatrix::Identity(2, 2);
  for (int s = 0; s < sites; ++s) {
    const ComplexMatrix& factor = (s == a) ? op_a : (s == b) ? op_b : eye2;
    out = kron(out, factor);
  }
  return out;
}

} // namespace

ComplexMatrix xy_hamiltonian(const XYChainParams& p) {
  p.validate();
  const Eigen::Index dim = Eigen::Index{1} << p.sites;
  ComplexMatrix sp = ComplexMatrix::Zero(2, 2);
  sp(0, 1) = 1.0; // sigma_+ in the {|0>, |1>} ordering
  const ComplexMatrix sm = sp.adjoint();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < p.sites; ++i) {
    const int j = (i + 1) % p.sites; // bond (N, 1) included
    h += two_site_operator(p.sites, i, sp, j, sm);
    h += two_site_operator(p.sites, i, sm, j, sp);
  }
  return p.coupling * h;
}

int domain_wall_count(long basis_index, int sites) {
  if (sites < 1) throw std::invalid_argument("domain_wall_count: sites must be >= 1");
  const long dim = 1L << sites;
  if (basis_index < 0 || basis_index >= dim) {
    throw std::invalid_argument("domain_wall_count: basis index out of range");
  }
  const unsigned long bits = static_cast<unsigned long>(basis_index);
  const unsigned long rotated = (bits >> 1) | ((bits & 1UL) << (sites - 1));
  return std::popcount((bits ^ rotated) & (static_cast<unsigned long>(dim) - 1));
}

} // namespace tclprop
