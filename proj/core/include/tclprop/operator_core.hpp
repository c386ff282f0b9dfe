#pragma once

#include "tclprop/types.hpp"

namespace tclprop {

// Dense complex linear algebra shared by every other module. All functions
// are pure; inputs are validated and failures reported via std::invalid_argument.

ComplexMatrix identity(Eigen::Index dim);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Exponential of a diagonal matrix, entrywise on the diagonal. Off-diagonal
// entries above 1e-14 * ||D||_F are rejected.
ComplexMatrix exp_diagonal(const ComplexMatrix& d);

// exp(scale * H) for Hermitian H via eigendecomposition.
// Rejects H with ||H - H^dag||_F > 1e-12 * ||H||_F.
ComplexMatrix exp_hermitian(const ComplexMatrix& h, Complex scale);

// True if every entry is finite (no NaN/Inf).
bool all_finite(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, const char* what);

} // namespace tclprop
