#pragma once

#include <string>
#include <vector>

#include "tclprop/expansion.hpp"
#include "tclprop/models.hpp"
#include "tclprop/quadrature.hpp"

namespace tclprop {

enum class Method { Tcl2, Dyson2, Reference };

std::string method_name(Method m);

// Ordered samples of U(t_k, 0); operators[0] = I at t = 0.
struct PropagatorTrajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> operators;
  Method method = Method::Tcl2;
};

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> values;
};

// Semigroup iteration: per-step propagators composed by one left
// multiplication per step. A trailing partial step is shortened to land on T.
PropagatorTrajectory propagate(const TimeDependentHamiltonian& h, double t_max, double step,
                               Method method, const QuadratureSpec& quad);

// Classic fixed-step RK4 on dU/dt = -i H(t) U, sampled every h_out with
// `substeps` internal steps per sample interval. Serves as the "exact" curve.
PropagatorTrajectory reference_propagate(const TimeDependentHamiltonian& h, double t_max,
                                         double h_out, int substeps);

// RK4 on the inverse-operator equation dV/dt = +i V H(t); returns V(T, 0).
ComplexMatrix reference_inverse(const TimeDependentHamiltonian& h, double t_max, double h_out,
                                int substeps);

// |U(t_k, 0)_{row, col}|^2 along a trajectory (0-based indices).
ObservableSeries population(const PropagatorTrajectory& traj, Eigen::Index row, Eigen::Index col);

// Pointwise mean of two series on identical time grids.
ObservableSeries average_series(const ObservableSeries& a, const ObservableSeries& b);

} // namespace tclprop
