#include "tclprop/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "tclprop/operator_core.hpp"

namespace tclprop {

std::string method_name(Method m) {
  switch (m) {
    case Method::Tcl2: return "tcl2";
    case Method::Dyson2: return "dyson2";
    case Method::Reference: return "reference";
  }
  throw std::logic_error("method_name: unknown method");
}

namespace {

std::vector<double> sample_grid(double t_max, double step) {
  if (t_max <= 0.0) throw std::invalid_argument("propagate: t_max must be positive");
  if (step <= 0.0 || step > t_max) {
    throw std::invalid_argument("propagate: step must satisfy 0 < step <= t_max");
  }
  const int n = static_cast<int>(std::ceil(t_max / step - 1e-12));
  std::vector<double> times(n + 1);
  times[0] = 0.0;
  for (int k = 1; k <= n; ++k) times[k] = std::min(k * step, t_max);
  times[n] = t_max;
  return times;
}

// One RK4 step of dU/dt = s(t, U).
template <class Rhs>
void rk4_step(const Rhs& rhs, ComplexMatrix& u, double t, double dt) {
  const ComplexMatrix k1 = rhs(t, u);
  const ComplexMatrix k2 = rhs(t + 0.5 * dt, ComplexMatrix(u + 0.5 * dt * k1));
  const ComplexMatrix k3 = rhs(t + 0.5 * dt, ComplexMatrix(u + 0.5 * dt * k2));
  const ComplexMatrix k4 = rhs(t + dt, ComplexMatrix(u + dt * k3));
  u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <class Rhs>
PropagatorTrajectory rk4_trajectory(const TimeDependentHamiltonian& h, double t_max, double h_out,
                                    int substeps, const Rhs& rhs) {
  if (substeps < 1) throw std::invalid_argument("reference propagator: substeps must be >= 1");
  PropagatorTrajectory traj;
  traj.method = Method::Reference;
  traj.times = sample_grid(t_max, h_out);
  traj.operators.reserve(traj.times.size());
  ComplexMatrix u = ComplexMatrix::Identity(h.dim, h.dim);
  traj.operators.push_back(u);
  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double a = traj.times[k - 1];
    const double dt = (traj.times[k] - a) / substeps;
    for (int s = 0; s < substeps; ++s) rk4_step(rhs, u, a + s * dt, dt);
    traj.operators.push_back(u);
  }
  return traj;
}

} // namespace

PropagatorTrajectory propagate(const TimeDependentHamiltonian& h, double t_max, double step,
                               Method method, const QuadratureSpec& quad) {
  if (method != Method::Tcl2 && method != Method::Dyson2) {
    throw std::invalid_argument("propagate: method must be Tcl2 or Dyson2");
  }
  PropagatorTrajectory traj;
  traj.method = method;
  traj.times = sample_grid(t_max, step);
  traj.operators.reserve(traj.times.size());
  ComplexMatrix u = ComplexMatrix::Identity(h.dim, h.dim);
  traj.operators.push_back(u);
  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double a = traj.times[k - 1];
    const double b = traj.times[k];
    const ComplexMatrix u_step = (method == Method::Tcl2)
                                     ? tcl2_step(h, a, b, quad).u_step
                                     : dyson2_step(h, a, b, quad);
    u = matmul(u_step, u); // one multiplication per iteration
    traj.operators.push_back(u);
  }
  return traj;
}

PropagatorTrajectory reference_propagate(const TimeDependentHamiltonian& h, double t_max,
                                         double h_out, int substeps) {
  return rk4_trajectory(h, t_max, h_out, substeps, [&](double t, const ComplexMatrix& u) {
    return ComplexMatrix(-kI * (h.evaluate(t) * u));
  });
}

ComplexMatrix reference_inverse(const TimeDependentHamiltonian& h, double t_max, double h_out,
                                int substeps) {
  const PropagatorTrajectory traj =
      rk4_trajectory(h, t_max, h_out, substeps, [&](double t, const ComplexMatrix& v) {
        return ComplexMatrix(kI * (v * h.evaluate(t)));
      });
  return traj.operators.back();
}

ObservableSeries population(const PropagatorTrajectory& traj, Eigen::Index row,
                            Eigen::Index col) {
  ObservableSeries out;
  out.times = traj.times;
  out.values.reserve(traj.operators.size());
  for (const ComplexMatrix& u : traj.operators) {
    if (row < 0 || col < 0 || row >= u.rows() || col >= u.cols()) {
      throw std::invalid_argument("population: index out of range");
    }
    out.values.push_back(std::norm(u(row, col)));
  }
  return out;
}

ObservableSeries average_series(const ObservableSeries& a, const ObservableSeries& b) {
  if (a.times != b.times) throw std::invalid_argument("average_series: time grids differ");
  ObservableSeries out;
  out.times = a.times;
  out.values.resize(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    out.values[k] = 0.5 * (a.values[k] + b.values[k]);
  }
  return out;
}

} // namespace tclprop
