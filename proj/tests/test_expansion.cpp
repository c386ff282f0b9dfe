#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tclprop/expansion.hpp"
#include "tclprop/models.hpp"
#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"
#include "tclprop/propagation.hpp"

using namespace tclprop;

namespace {

const LambdaParams kBenchParams{1.0, 0.7, 1.3, 5.3};
const QuadratureSpec kQuad{8, 1};

TimeDependentHamiltonian zero_hamiltonian(Eigen::Index dim) {
  return {dim, [dim](double) { return ComplexMatrix::Zero(dim, dim); }, true};
}

// The explicit short-time propagator of the Lambda system, assembled from the
// closed-form coefficients. Entry (1,2) carries g with the detunings
// exchanged; the direct double integral of H(s)H(s1) produces that rather
// than the complex conjugate.
ComplexMatrix lambda_tcl_matrix(double t, double t0, const LambdaParams& p) {
  LambdaParams swapped = p;
  std::swap(swapped.detuning1, swapped.detuning2);
  const Complex f1 = lambda_f(1, t, t0, p);
  const Complex f2 = lambda_f(2, t, t0, p);
  const Complex h1 = lambda_h(1, t, t0, p);
  const Complex h2 = lambda_h(2, t, t0, p);
  const Complex g = lambda_g(t, t0, p);
  const Complex gbar = lambda_g(t, t0, swapped);
  const double oo = p.rabi1 * p.rabi2;

  ComplexMatrix u(3, 3);
  u(0, 0) = std::exp(f2);
  u(0, 1) = -std::exp(f1) * oo * gbar;
  u(0, 2) = -kI * std::conj(h2) * std::exp(std::conj(f1) + std::conj(f2));
  u(1, 0) = -std::exp(f2) * oo * g;
  u(1, 1) = std::exp(f1);
  u(1, 2) = -kI * std::conj(h1) * std::exp(std::conj(f1) + std::conj(f2));
  u(2, 0) = -kI * std::exp(f2) * h2;
  u(2, 1) = -kI * std::exp(f1) * h1;
  u(2, 2) = std::exp(std::conj(f1) + std::conj(f2));
  return u;
}

ComplexMatrix lambda_dyson_matrix(double t, double t0, const LambdaParams& p) {
  LambdaParams swapped = p;
  std::swap(swapped.detuning1, swapped.detuning2);
  const Complex f1 = lambda_f(1, t, t0, p);
  const Complex f2 = lambda_f(2, t, t0, p);
  const Complex h1 = lambda_h(1, t, t0, p);
  const Complex h2 = lambda_h(2, t, t0, p);
  const Complex g = lambda_g(t, t0, p);
  const Complex gbar = lambda_g(t, t0, swapped);
  const double oo = p.rabi1 * p.rabi2;

  ComplexMatrix u(3, 3);
  u(0, 0) = 1.0 + f2;
  u(0, 1) = -oo * gbar;
  u(0, 2) = -kI * std::conj(h2);
  u(1, 0) = -oo * g;
  u(1, 1) = 1.0 + f1;
  u(1, 2) = -kI * std::conj(h1);
  u(2, 0) = -kI * h2;
  u(2, 1) = -kI * h1;
  u(2, 2) = 1.0 + std::conj(f1) + std::conj(f2);
  return u;
}

} // namespace

TEST_CASE("k2_integral") {
  CHECK(k2_integral(zero_hamiltonian(3), 0.0, 1.0, kQuad).norm() == 0.0);

  // Lambda system: diagonal entries are the closed-form f coefficients
  const TimeDependentHamiltonian lam = lambda_hamiltonian(kBenchParams);
  const ComplexMatrix k = k2_integral(lam, 0.0, 0.1, kQuad);
  CHECK(std::abs(k(0, 0) - lambda_f(2, 0.1, 0.0, kBenchParams)) <= 1e-10);
  CHECK(std::abs(k(1, 1) - lambda_f(1, 0.1, 0.0, kBenchParams)) <= 1e-10);
  CHECK(std::abs(k(2, 2) - std::conj(lambda_f(1, 0.1, 0.0, kBenchParams)) -
                 std::conj(lambda_f(2, 0.1, 0.0, kBenchParams))) <= 1e-10);

  // constant zero-diagonal hermitian H: -diag(H^2) tau^2 / 2
  std::mt19937 rng(43);
  ComplexMatrix h = oracles::random_hermitian(4, rng);
  h.diagonal().setZero();
  const double tau = 0.3;
  const ComplexMatrix kc = k2_integral(constant_hamiltonian(h), 1.0, 1.0 + tau, kQuad);
  const ComplexMatrix expected = -0.5 * tau * tau * project_diag(h * h);
  CHECK((kc - expected).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(k2_integral(lam, 0.5, 0.4, kQuad), std::invalid_argument);
  CHECK_THROWS_AS(k2_integral(constant_hamiltonian(oracles::random_hermitian(3, rng)), 0.0, 0.1,
                              kQuad),
                  std::invalid_argument);
}

TEST_CASE("sigma2_matrix") {
  CHECK((sigma2_matrix(zero_hamiltonian(3), 0.0, 1.0, kQuad) - identity(3)).norm() == 0.0);

  const TimeDependentHamiltonian lam = lambda_hamiltonian(kBenchParams);
  const double t = 0.1;
  const ComplexMatrix m = sigma2_matrix(lam, 0.0, t, kQuad);
  const double oo = kBenchParams.rabi1 * kBenchParams.rabi2;
  LambdaParams swapped = kBenchParams;
  std::swap(swapped.detuning1, swapped.detuning2);
  CHECK(std::abs(m(1, 0) + oo * lambda_g(t, 0.0, kBenchParams)) <= 1e-10);
  CHECK(std::abs(m(0, 1) + oo * lambda_g(t, 0.0, swapped)) <= 1e-10);
  CHECK(std::abs(m(2, 0) + kI * lambda_h(2, t, 0.0, kBenchParams)) <= 1e-10);
  CHECK(std::abs(m(2, 1) + kI * lambda_h(1, t, 0.0, kBenchParams)) <= 1e-10);
  CHECK(std::abs(m(0, 2) + kI * std::conj(lambda_h(2, t, 0.0, kBenchParams))) <= 1e-10);
  CHECK(std::abs(m(1, 2) + kI * std::conj(lambda_h(1, t, 0.0, kBenchParams))) <= 1e-10);
  CHECK(std::abs(m(0, 0) - 1.0) <= 1e-14);

  // first-order block is anti-hermitian for hermitian H_I
  const ComplexMatrix first =
      integrate([&](double s) { return project_offdiag(lam.evaluate(s)); }, 0.0, t, kQuad);
  const ComplexMatrix second =
      project_offdiag(second_moment_integral(lam, 0.0, t, kQuad));
  const ComplexMatrix m1 = m - identity(3) + second; // isolate -i * first
  CHECK((m1 - (-kI * first)).norm() <= 1e-13);
  CHECK((m1 + m1.adjoint()).norm() <= 1e-13);
}

TEST_CASE("tcl2_step") {
  const TimeDependentHamiltonian none = zero_hamiltonian(3);
  CHECK((tcl2_step(none, 0.0, 1.0, kQuad).u_step - identity(3)).norm() == 0.0);

  // explicit-matrix reproduction over [0, 0.1]
  const TimeDependentHamiltonian lam = lambda_hamiltonian(kBenchParams);
  const Tcl2StepResult step = tcl2_step(lam, 0.0, 0.1, kQuad);
  const ComplexMatrix expected = lambda_tcl_matrix(0.1, 0.0, kBenchParams);
  CHECK((step.u_step - expected).cwiseAbs().maxCoeff() <= 1e-10);

  // factorization invariants
  CHECK((step.u_step - step.offdiag_factor * step.diag_factor).norm() == 0.0);
  CHECK(project_offdiag(step.diag_factor).norm() == 0.0);
  CHECK((project_diag(step.u_step) - step.diag_factor).norm() <= 1e-13);

  // third-order local truncation: halving h shrinks the error ~8x
  auto single_step_error = [&](double h) {
    const ComplexMatrix ref = reference_propagate(lam, h, h, 400).operators.back();
    return (tcl2_step(lam, 0.0, h, kQuad).u_step - ref).norm();
  };
  const double ratio = single_step_error(0.1) / single_step_error(0.05);
  CHECK(ratio >= 6.0);
  CHECK(ratio <= 10.0);

  // unitarity defect of a single step is O(h^3), not zero
  const ComplexMatrix uu = step.u_step.adjoint() * step.u_step;
  const double defect = (uu - identity(3)).norm();
  CHECK(defect > 0.0);
  CHECK(defect < 1e-2);
}

TEST_CASE("tcl2_step with diagonal hamiltonian frame") {
  std::mt19937 rng(47);
  const ComplexMatrix h = oracles::random_hermitian(3, rng);
  const TimeDependentHamiltonian base = constant_hamiltonian(h);
  const Tcl2StepResult step = tcl2_step(base, 0.0, 0.1, kQuad);
  CHECK((step.u_step - step.offdiag_factor * step.diag_factor).norm() <= 1e-15);
  CHECK(project_offdiag(step.diag_factor).norm() == 0.0);
  const ComplexMatrix ref = exp_hermitian(h, -kI * 0.1);
  CHECK((step.u_step - ref).norm() <= 1e-3); // second-order accuracy only
}

TEST_CASE("dyson2_step") {
  CHECK((dyson2_step(zero_hamiltonian(2), 0.0, 1.0, kQuad) - identity(2)).norm() == 0.0);

  std::mt19937 rng(53);
  const ComplexMatrix h = oracles::random_hermitian(3, rng);
  const double tau = 0.2;
  const ComplexMatrix u = dyson2_step(constant_hamiltonian(h), 0.0, tau, kQuad);
  const ComplexMatrix expected =
      identity(3) - kI * tau * h - 0.5 * tau * tau * ComplexMatrix(h * h);
  CHECK((u - expected).cwiseAbs().maxCoeff() <= 1e-12);

  const TimeDependentHamiltonian lam = lambda_hamiltonian(kBenchParams);
  const ComplexMatrix closed_form = lambda_dyson_matrix(0.1, 0.0, kBenchParams);
  CHECK((dyson2_step(lam, 0.0, 0.1, kQuad) - closed_form).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("tcl2 and dyson2 agree to second order") {
  const TimeDependentHamiltonian lam = lambda_hamiltonian(kBenchParams);
  auto gap = [&](double h) {
    return (tcl2_step(lam, 0.0, h, kQuad).u_step - dyson2_step(lam, 0.0, h, kQuad)).norm();
  };
  const double ratio = gap(0.2) / gap(0.1);
  CHECK(ratio >= 6.0);
  CHECK(ratio <= 10.0);
}
