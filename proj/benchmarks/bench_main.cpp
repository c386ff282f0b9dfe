#include <benchmark/benchmark.h>

#include "tclprop/expansion.hpp"
#include "tclprop/models.hpp"
#include "tclprop/propagation.hpp"
#include "tclprop/thermo.hpp"

namespace {

using namespace tclprop;

const LambdaParams kParams{1.0, 0.7, 1.3, 5.3};

void BM_Tcl2Step(benchmark::State& state) {
  const TimeDependentHamiltonian h = lambda_hamiltonian(kParams);
  const QuadratureSpec quad{static_cast<int>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tcl2_step(h, 0.0, 0.1, quad));
  }
}
BENCHMARK(BM_Tcl2Step)->Arg(4)->Arg(8);

void BM_Dyson2Step(benchmark::State& state) {
  const TimeDependentHamiltonian h = lambda_hamiltonian(kParams);
  const QuadratureSpec quad{4, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyson2_step(h, 0.0, 0.1, quad));
  }
}
BENCHMARK(BM_Dyson2Step);

void BM_PropagateLambda(benchmark::State& state) {
  const TimeDependentHamiltonian h = lambda_hamiltonian(kParams);
  const double t_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(h, t_max, 0.1, Method::Tcl2, QuadratureSpec{4, 1}));
  }
}
BENCHMARK(BM_PropagateLambda)->Arg(5)->Arg(20);

void BM_ReferencePropagate(benchmark::State& state) {
  const TimeDependentHamiltonian h = lambda_hamiltonian(kParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference_propagate(h, 20.0, 0.1, 20));
  }
}
BENCHMARK(BM_ReferencePropagate);

void BM_XyBuild(benchmark::State& state) {
  const XYChainParams params{static_cast<int>(state.range(0)), 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(xy_hamiltonian(params));
  }
}
BENCHMARK(BM_XyBuild)->Arg(6)->Arg(10);

void BM_PartitionTcl2(benchmark::State& state) {
  const ComplexMatrix h = xy_hamiltonian({static_cast<int>(state.range(0)), 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_tcl2(h, 0.5));
  }
}
BENCHMARK(BM_PartitionTcl2)->Arg(6)->Arg(10);

void BM_PartitionExact(benchmark::State& state) {
  const ComplexMatrix h = xy_hamiltonian({static_cast<int>(state.range(0)), 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_exact(h, 0.5));
  }
}
BENCHMARK(BM_PartitionExact)->Arg(6)->Arg(10);

} // namespace

BENCHMARK_MAIN();
