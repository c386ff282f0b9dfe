#include "tclprop/expansion.hpp"

#include <stdexcept>

#include "tclprop/interaction_picture.hpp"
#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"

namespace tclprop {

namespace {

void require_interval(double t0, double t, const char* what) {
  if (t < t0) throw std::invalid_argument(std::string(what) + ": t < t0");
}

void require_zero_diagonal(const TimeDependentHamiltonian& h, const char* what) {
  if (!h.has_zero_diagonal) {
    throw std::invalid_argument(std::string(what) +
                                ": Hamiltonian must have zero diagonal; transform to the "
                                "interaction frame first");
  }
}

} // namespace

ComplexMatrix second_moment_integral(const TimeDependentHamiltonian& h, double t0, double t,
                                     const QuadratureSpec& quad) {
  require_interval(t0, t, "second_moment_integral");
  return integrate(
      [&](double s) {
        const ComplexMatrix inner =
            integrate([&](double s1) { return h.evaluate(s1); }, t0, s, quad);
        return ComplexMatrix(h.evaluate(s) * inner);
      },
      t0, t, quad);
}

ComplexMatrix k2_integral(const TimeDependentHamiltonian& h_i, double t0, double t,
                          const QuadratureSpec& quad) {
  require_interval(t0, t, "k2_integral");
  require_zero_diagonal(h_i, "k2_integral");
  return -project_diag(second_moment_integral(h_i, t0, t, quad));
}

ComplexMatrix sigma2_matrix(const TimeDependentHamiltonian& h_i, double t0, double t,
                            const QuadratureSpec& quad) {
  require_interval(t0, t, "sigma2_matrix");
  require_zero_diagonal(h_i, "sigma2_matrix");
  const ComplexMatrix first =
      integrate([&](double s) { return project_offdiag(h_i.evaluate(s)); }, t0, t, quad);
  ComplexMatrix m = ComplexMatrix::Identity(h_i.dim, h_i.dim);
  m -= kI * first;
  m -= project_offdiag(second_moment_integral(h_i, t0, t, quad));
  return m;
}

Tcl2StepResult tcl2_step(const TimeDependentHamiltonian& h, double t0, double t,
                         const QuadratureSpec& quad) {
  require_interval(t0, t, "tcl2_step");
  const InteractionFrame frame{h, t0, quad};
  const TimeDependentHamiltonian h_i = interaction_hamiltonian(frame);

  // One nested integral feeds both factors: P and Q commute with integration.
  const ComplexMatrix s2 = second_moment_integral(h_i, t0, t, quad);
  const ComplexMatrix d = exp_diagonal(-project_diag(s2));
  const ComplexMatrix first =
      integrate([&](double s) { return project_offdiag(h_i.evaluate(s)); }, t0, t, quad);
  ComplexMatrix m = ComplexMatrix::Identity(h.dim, h.dim);
  m -= kI * first;
  m -= project_offdiag(s2);

  Tcl2StepResult result;
  if (h.has_zero_diagonal) {
    result.diag_factor = d;
    result.offdiag_factor = m;
  } else {
    const ComplexMatrix u0 = u_zero(frame, t);
    ComplexVector u0_inv(h.dim);
    for (Eigen::Index k = 0; k < h.dim; ++k) u0_inv(k) = 1.0 / u0(k, k);
    result.diag_factor = u0 * d;
    result.offdiag_factor = u0 * m * u0_inv.asDiagonal();
  }
  result.u_step = result.offdiag_factor * result.diag_factor;
  return result;
}

ComplexMatrix dyson2_step(const TimeDependentHamiltonian& h, double t0, double t,
                          const QuadratureSpec& quad) {
  require_interval(t0, t, "dyson2_step");
  const ComplexMatrix first = integrate([&](double s) { return h.evaluate(s); }, t0, t, quad);
  ComplexMatrix u = ComplexMatrix::Identity(h.dim, h.dim);
  u -= kI * first;
  u -= second_moment_integral(h, t0, t, quad);
  return u;
}

} // namespace tclprop
