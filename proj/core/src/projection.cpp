#include "tclprop/projection.hpp"

#include "tclprop/operator_core.hpp"

namespace tclprop {

ComplexMatrix project_diag(const ComplexMatrix& a) {
  require_square(a, "project_diag");
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  out.diagonal() = a.diagonal();
  return out;
}

ComplexMatrix project_offdiag(const ComplexMatrix& a) {
  require_square(a, "project_offdiag");
  ComplexMatrix out = a;
  out.diagonal().setZero();
  return out;
}

} // namespace tclprop
