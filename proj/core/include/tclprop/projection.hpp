#pragma once

#include "tclprop/types.hpp"

namespace tclprop {

// Diagonal-extracting projector P and its complement Q = I - P, acting on
// matrices in the computational basis. Both are idempotent, mutually
// orthogonal and sum to the identity map.

// P A: keep the diagonal of A, zero everything else.
ComplexMatrix project_diag(const ComplexMatrix& a);

// Q A: zero the diagonal of A.
ComplexMatrix project_offdiag(const ComplexMatrix& a);

} // namespace tclprop
