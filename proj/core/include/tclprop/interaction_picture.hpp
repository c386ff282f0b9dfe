#pragma once

#include "tclprop/models.hpp"
#include "tclprop/quadrature.hpp"
#include "tclprop/types.hpp"

namespace tclprop {

// Diagonal-frame split U = U0 * U_I: U0 is the analytically known propagator
// of the diagonal part of H, and the transformed H_I has zero diagonal.
struct InteractionFrame {
  TimeDependentHamiltonian base;
  double t0 = 0.0;
  QuadratureSpec quad{};
};

// Accumulated diagonal phase Phi(t) = int_{t0}^{t} P H(s) ds (a diagonal matrix).
ComplexMatrix integrate_diagonal_phase(const InteractionFrame& frame, double t);

// U0(t, t0) = exp(-i Phi(t)); unitary when the diagonal of H is real.
ComplexMatrix u_zero(const InteractionFrame& frame, double t);

// H_I(t) = exp(i Phi(t)) Q H(t) exp(-i Phi(t)); reports has_zero_diagonal.
// When the base Hamiltonian already has zero diagonal the transform is the
// identity and the base evaluator is returned unchanged.
TimeDependentHamiltonian interaction_hamiltonian(const InteractionFrame& frame);

// U(t, t0) = U0 * U_I.
ComplexMatrix recombine(const ComplexMatrix& u0, const ComplexMatrix& ui);

} // namespace tclprop
