#include "tclprop/interaction_picture.hpp"

#include <cmath>
#include <stdexcept>

#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"

namespace tclprop {

ComplexMatrix integrate_diagonal_phase(const InteractionFrame& frame, double t) {
  if (t < frame.t0) throw std::invalid_argument("integrate_diagonal_phase: t < t0");
  const Eigen::Index dim = frame.base.dim;
  if (frame.base.has_zero_diagonal) return ComplexMatrix::Zero(dim, dim);
  return integrate(
      [&](double s) { return project_diag(frame.base.evaluate(s)); }, frame.t0, t, frame.quad);
}

ComplexMatrix u_zero(const InteractionFrame& frame, double t) {
  return exp_diagonal(-kI * integrate_diagonal_phase(frame, t));
}

TimeDependentHamiltonian interaction_hamiltonian(const InteractionFrame& frame) {
  if (frame.base.has_zero_diagonal) return frame.base;
  InteractionFrame fr = frame;
  return {fr.base.dim,
          [fr](double t) {
            const ComplexVector phi = integrate_diagonal_phase(fr, t).diagonal();
            ComplexVector left(phi.size()), right(phi.size());
            for (Eigen::Index k = 0; k < phi.size(); ++k) {
              left(k) = std::exp(kI * phi(k));
              right(k) = std::exp(-kI * phi(k));
            }
            const ComplexMatrix v = project_offdiag(fr.base.evaluate(t));
            return ComplexMatrix(left.asDiagonal() * v * right.asDiagonal());
          },
          true};
}

ComplexMatrix recombine(const ComplexMatrix& u0, const ComplexMatrix& ui) {
  return matmul(u0, ui);
}

} // namespace tclprop
