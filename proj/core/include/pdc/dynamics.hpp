#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pdc/fock.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/matrix.hpp"
#include "pdc/spectral.hpp"

namespace pdc {

// Block matrix elements of the propagator:
// entries(l, k) = <2l+p, M-l| e^{-iHt} |2k+p, M-k>.
struct PropagatorBlock {
    int p = 0;
    int M = 0;
    double t = 0.0;
    CMat entries;
};

struct TimeSeries {
    std::vector<double> times;    // strictly increasing
    std::vector<Complex> values;  // same length
};

// Caches one eigensystem per (p, M) so time grids reuse the decomposition.
// Safe to share across threads; the cache is guarded internally.
class BlockSolver {
public:
    explicit BlockSolver(const ModelParams& params) : params_(params) {}

    const ModelParams& params() const { return params_; }
    const BlockEigensystem& block(int p, int M) const;

private:
    ModelParams params_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, BlockEigensystem> cache_;
};

PropagatorBlock propagator_block(const ModelParams& params, int p, int M, double t);
PropagatorBlock propagator_block(const BlockSolver& solver, int p, int M, double t);

StateVector evolve(const ModelParams& params, const StateVector& state, double t);
StateVector evolve(const BlockSolver& solver, const StateVector& state, double t);

// <psi(t)| X |psi(t)>, organized blockwise.
Complex expectation(const ModelParams& params, const StateVector& state,
                    const ObservableSpec& observable, double t);
Complex expectation(const BlockSolver& solver, const StateVector& state,
                    const ObservableSpec& observable, double t);

// Closed-form photon-number expectation for the initial Fock state
// |2l+p, M-l>, evaluated as the direct triple sum over the block spectrum.
// Retained as a cross-check for the blockwise propagator route.
double expect_n1_fock(const ModelParams& params, int l, int p, int M, double t);

// <X^2> - <X>^2 for Hermitian X; the operator square acts on the
// bandwidth-enlarged support. Rejects observables not flagged Hermitian.
double variance(const ModelParams& params, const StateVector& state,
                const ObservableSpec& observable, double t);

Complex coherent_expectation(const ModelParams& params, Complex z1, Complex z2,
                             const ObservableSpec& observable, double t,
                             double tail_epsilon);

TimeSeries time_series(const ModelParams& params, const StateVector& state,
                       const ObservableSpec& observable,
                       const std::vector<double>& t_grid);

// CSV with mandatory header "t,value_re,value_im", 17 significant digits.
std::string time_series_to_csv(const TimeSeries& series);

}  // namespace pdc
