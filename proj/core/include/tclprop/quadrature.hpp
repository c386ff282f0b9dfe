#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace tclprop {

// Gauss-Legendre quadrature used for all time integrals. The integrands are
// smooth oscillatory exponentials, so a low fixed order per step suffices.
struct QuadratureSpec {
  int rule_order = 4; // nodes per panel, >= 2
  int panels = 1;     // equal subdivisions of the interval, >= 1

  void validate() const {
    if (rule_order < 2) throw std::invalid_argument("QuadratureSpec: rule_order must be >= 2");
    if (panels < 1) throw std::invalid_argument("QuadratureSpec: panels must be >= 1");
  }
};

// Nodes and weights of the n-point rule on [-1, 1].
void gauss_legendre_nodes(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integrates f over [a, b]; f maps a double to a scalar or Eigen matrix.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& q) {
  q.validate();
  using R = std::decay_t<decltype(f(a))>;
  std::vector<double> x, w;
  gauss_legendre_nodes(q.rule_order, x, w);
  const double panel = (b - a) / q.panels;
  R acc{};
  bool first = true;
  for (int p = 0; p < q.panels; ++p) {
    const double lo = a + p * panel;
    const double mid = lo + 0.5 * panel;
    const double half = 0.5 * panel;
    for (int k = 0; k < q.rule_order; ++k) {
      const double t = mid + half * x[k];
      const double wt = half * w[k];
      if (first) {
        acc = R(f(t) * wt);
        first = false;
      } else {
        acc += f(t) * wt;
      }
    }
  }
  return acc;
}

} // namespace tclprop
