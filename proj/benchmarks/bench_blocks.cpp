#include <benchmark/benchmark.h>

#include "pdc/dual_hahn.hpp"
#include "pdc/dynamics.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/observables.hpp"
#include "pdc/spectral.hpp"

namespace {

const pdc::ModelParams kParams = pdc::resonance_params(1.0, 1.0);

void BM_BuildBlockDirect(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto h = pdc::build_block_direct(kParams, 0, M);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_BuildBlockDirect)->Arg(10)->Arg(50)->Arg(200);

void BM_SolveAnalytic(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto es = pdc::solve_analytic(kParams, 0, M);
        benchmark::DoNotOptimize(es);
    }
}
BENCHMARK(BM_SolveAnalytic)->Arg(10)->Arg(50)->Arg(200);

void BM_SolveNumeric(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const auto block = pdc::build_block_formula(kParams, 0, M);
    for (auto _ : state) {
        auto es = pdc::solve_numeric(block);
        benchmark::DoNotOptimize(es);
    }
}
BENCHMARK(BM_SolveNumeric)->Arg(10)->Arg(50)->Arg(200);

void BM_TransformMatrix(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const pdc::DualHahnParams dh{-0.5, 0.0, N};
    for (auto _ : state) {
        auto w = pdc::dual_hahn_transform_matrix(dh);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_TransformMatrix)->Arg(20)->Arg(100);

void BM_PropagatorBlock(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    pdc::BlockSolver solver(kParams);
    solver.block(0, M);  // decomposition outside the timed loop
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        auto u = pdc::propagator_block(solver, 0, M, t);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_PropagatorBlock)->Arg(10)->Arg(50);

void BM_CoherentExpectation(benchmark::State& state) {
    const auto psi = pdc::coherent_state({1.0, 0.0}, {1.0, 0.5}, 1e-8);
    const auto n1 = pdc::observables::photon_number_1();
    pdc::BlockSolver solver(kParams);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        auto v = pdc::expectation(solver, psi, n1, t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CoherentExpectation);

}  // namespace
