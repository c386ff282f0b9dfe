#pragma once

#include <Eigen/Dense>
#include <complex>

namespace tclprop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

} // namespace tclprop
