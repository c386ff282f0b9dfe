#pragma once

#include <functional>

#include "tclprop/types.hpp"

namespace tclprop {

// A dimension plus an evaluator t -> matrix. `has_zero_diagonal` marks
// Hamiltonians whose diagonal vanishes identically; several expansion
// formulas are only valid in that case and check the flag.
struct TimeDependentHamiltonian {
  Eigen::Index dim = 0;
  std::function<ComplexMatrix(double)> evaluate;
  bool has_zero_diagonal = false;
};

// Wraps a fixed matrix as a constant-in-time Hamiltonian. The zero-diagonal
// flag is detected from the matrix itself.
TimeDependentHamiltonian constant_hamiltonian(const ComplexMatrix& h);

// Three-level Lambda system driven by two non-resonant fields:
// H(t) = Omega_1 e^{i w_1 t} E_32 + Omega_2 e^{i w_2 t} E_31 + h.c.
// Level ordering: index 0 = ground |1>, 1 = |2>, 2 = excited |3>.
struct LambdaParams {
  double rabi1 = 1.0;      // Omega_1
  double rabi2 = 0.7;      // Omega_2
  double detuning1 = 1.3;  // w_1, nonzero
  double detuning2 = 5.3;  // w_2, nonzero

  void validate() const;
};

TimeDependentHamiltonian lambda_hamiltonian(const LambdaParams& p);

// Closed forms of the coefficient integrals of the Lambda system.
// h_i(t,t0) = int_{t0}^{t} Omega_i e^{i w_i s} ds
Complex lambda_h(int i, double t, double t0, const LambdaParams& p);
// f_i(t,t0) = -Omega_i^2 int_{t0}^{t} dt' int_{t0}^{t'} ds e^{i (s - t') w_i}
Complex lambda_f(int i, double t, double t0, const LambdaParams& p);
// g(t,t0) = int_{t0}^{t} dt1 int_{t0}^{t1} ds e^{-i t1 w_1 + i s w_2}
Complex lambda_g(double t, double t0, const LambdaParams& p);

// Periodic XY spin chain, H = A sum_i (s+_i s-_{i+1} + s-_i s+_{i+1}).
struct XYChainParams {
  int sites = 10;      // N >= 3
  double coupling = 1; // A

  void validate() const;
};

// Dense 2^N x 2^N chain Hamiltonian built from Kronecker products.
// Site 1 is the most significant bit of the basis index.
ComplexMatrix xy_hamiltonian(const XYChainParams& p);

// Number of cyclically adjacent bit pairs of `basis_index` that differ in its
// N-bit expansion. The diagonal of H^2 is A^2 times this count.
int domain_wall_count(long basis_index, int sites);

} // namespace tclprop
