#pragma once

#include "tclprop/models.hpp"
#include "tclprop/quadrature.hpp"
#include "tclprop/types.hpp"

namespace tclprop {

// One short-time step of the projection expansion, factored as
// u_step = offdiag_factor * diag_factor.
//
// For a zero-diagonal Hamiltonian diag_factor is exactly D = exp[int K] I and
// offdiag_factor is exactly M = [I - Sigma]^{-1} I truncated at second order.
// When H carries a diagonal the analytic frame propagator U0 is folded in as
// diag_factor = U0 * D and offdiag_factor = U0 * M * U0^{-1}, which keeps the
// factorization exact.
struct Tcl2StepResult {
  ComplexMatrix u_step;
  ComplexMatrix diag_factor;
  ComplexMatrix offdiag_factor;
};

// int_{t0}^{t} ds int_{t0}^{s} ds1 H(s) H(s1), by nested Gauss-Legendre.
ComplexMatrix second_moment_integral(const TimeDependentHamiltonian& h, double t0, double t,
                                     const QuadratureSpec& quad);

// int_{t0}^{t} K(s) ds = -int_{t0}^{t} ds int_{t0}^{s} ds1 P[H_I(s) H_I(s1)].
// Requires a zero-diagonal H_I (the second-order generator is derived under P H_I = 0).
ComplexMatrix k2_integral(const TimeDependentHamiltonian& h_i, double t0, double t,
                          const QuadratureSpec& quad);

// M = I - i int Q H_I(s) ds - int int Q[H_I(s) H_I(s1)], the truncated
// geometric series of [I - Sigma]^{-1} applied to the identity.
ComplexMatrix sigma2_matrix(const TimeDependentHamiltonian& h_i, double t0, double t,
                            const QuadratureSpec& quad);

// Full short-time propagator over [t0, t]: builds the interaction frame,
// computes D and M, and recombines with U0.
Tcl2StepResult tcl2_step(const TimeDependentHamiltonian& h, double t0, double t,
                         const QuadratureSpec& quad);

// Second-order Dyson comparator: I - i int H - int int H(t') H(s).
ComplexMatrix dyson2_step(const TimeDependentHamiltonian& h, double t0, double t,
                          const QuadratureSpec& quad);

} // namespace tclprop
