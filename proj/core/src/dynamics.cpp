#include "pdc/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pdc/dual_hahn.hpp"

namespace pdc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_time_grid(const std::vector<double>& t_grid) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
}

}  // namespace

const BlockEigensystem& BlockSolver::block(int p, int M) const {
    const auto key = std::make_pair(p, M);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    BlockEigensystem es = solve_block(params_, p, M);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(es)).first->second;
}

PropagatorBlock propagator_block(const BlockSolver& solver, int p, int M, double t) {
    const auto& es = solver.block(p, M);
    const int n = M + 1;
    std::vector<Complex> phases(n);
    for (int j = 0; j < n; ++j) phases[j] = std::exp(-kI * t * es.energies[j]);

    PropagatorBlock u;
    u.p = p;
    u.M = M;
    u.t = t;
    u.entries = CMat(n, n);
    // U(l, k) = sum_j V(l, j) e^{-i t E_j} V(k, j)
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            Complex sum{0.0, 0.0};
            for (int j = 0; j < n; ++j) sum += es.vectors(l, j) * phases[j] * es.vectors(k, j);
            u.entries(l, k) = sum;
        }
    return u;
}

PropagatorBlock propagator_block(const ModelParams& params, int p, int M, double t) {
    return propagator_block(BlockSolver(params), p, M, t);
}

StateVector evolve(const BlockSolver& solver, const StateVector& state, double t) {
    // group amplitudes by (p, M)
    std::map<std::pair<int, int>, std::vector<std::pair<int, Complex>>> blocks;
    for (const auto& [label, amp] : state.amplitudes()) {
        const auto bc = decompose(label);
        blocks[{bc.p, bc.M}].emplace_back(bc.k, amp);
    }

    StateVector out;
    for (const auto& [pm, comps] : blocks) {
        const auto [p, M] = pm;
        const auto& es = solver.block(p, M);
        const int n = M + 1;
        // c' = V e^{-itE} V^T c
        std::vector<Complex> y(n, Complex{0.0, 0.0});
        for (const auto& [k, c] : comps)
            for (int j = 0; j < n; ++j) y[j] += es.vectors(k, j) * c;
        for (int j = 0; j < n; ++j) y[j] *= std::exp(-kI * t * es.energies[j]);
        for (int k = 0; k < n; ++k) {
            Complex v{0.0, 0.0};
            for (int j = 0; j < n; ++j) v += es.vectors(k, j) * y[j];
            out.add(compose(BlockCoord{p, M, k}), v);
        }
    }
    return out;
}

StateVector evolve(const ModelParams& params, const StateVector& state, double t) {
    return evolve(BlockSolver(params), state, t);
}

Complex expectation(const BlockSolver& solver, const StateVector& state,
                    const ObservableSpec& observable, double t) {
    const StateVector psi_t = evolve(solver, state, t);
    return inner(psi_t, apply(observable, psi_t));
}

Complex expectation(const ModelParams& params, const StateVector& state,
                    const ObservableSpec& observable, double t) {
    return expectation(BlockSolver(params), state, observable, t);
}

double expect_n1_fock(const ModelParams& params, int l, int p, int M, double t) {
    const auto res = resonance_check(params, 1e-9);
    if (!res.ok || params.g == 0.0)
        throw std::domain_error("expect_n1_fock: requires resonance and g != 0");
    if (l < 0 || l > M) throw std::invalid_argument("expect_n1_fock: l out of [0, M]");

    const DualHahnParams dh{p - 0.5, 0.0, M};
    const auto lattice = dual_hahn_lattice(dh);
    const auto weights = dual_hahn_weights(dh);
    // poly(k, j) = P_k(lambda_j)
    const Mat w = dual_hahn_transform_matrix(dh);
    Mat poly(M + 1, M + 1);
    for (int j = 0; j <= M; ++j) {
        const double sqrt_rho = std::sqrt(weights[j]);
        for (int k = 0; k <= M; ++k) poly(k, j) = w(j, k) / sqrt_rho;
    }

    // s(j1, j2) = sum_k k P_k(lambda_j1) P_k(lambda_j2)
    Mat s(M + 1, M + 1);
    for (int j1 = 0; j1 <= M; ++j1)
        for (int j2 = 0; j2 <= M; ++j2) {
            double sum = 0.0;
            for (int k = 1; k <= M; ++k) sum += k * poly(k, j1) * poly(k, j2);
            s(j1, j2) = sum;
        }

    Complex total{0.0, 0.0};
    for (int j1 = 0; j1 <= M; ++j1)
        for (int j2 = 0; j2 <= M; ++j2) {
            const Complex phase =
                std::exp(-2.0 * kI * t * params.g * (lattice[j2] - lattice[j1]));
            total += phase * weights[j1] * weights[j2] * poly(l, j1) * poly(l, j2) * s(j1, j2);
        }
    return p + 2.0 * total.real();
}

double variance(const ModelParams& params, const StateVector& state,
                const ObservableSpec& observable, double t) {
    if (!observable.hermitian)
        throw std::invalid_argument("variance: observable must be Hermitian");
    const StateVector psi_t = evolve(params, state, t);
    const StateVector x_psi = apply(observable, psi_t);
    const double mean = inner(psi_t, x_psi).real();
    const double second_moment = inner(x_psi, x_psi).real();
    return second_moment - mean * mean;
}

Complex coherent_expectation(const ModelParams& params, Complex z1, Complex z2,
                             const ObservableSpec& observable, double t,
                             double tail_epsilon) {
    return expectation(params, coherent_state(z1, z2, tail_epsilon), observable, t);
}

TimeSeries time_series(const ModelParams& params, const StateVector& state,
                       const ObservableSpec& observable,
                       const std::vector<double>& t_grid) {
    check_time_grid(t_grid);
    BlockSolver solver(params);
    TimeSeries series;
    series.times = t_grid;
    series.values.reserve(t_grid.size());
    for (double t : t_grid) series.values.push_back(expectation(solver, state, observable, t));
    return series;
}

std::string time_series_to_csv(const TimeSeries& series) {
    std::string out = "t,value_re,value_im\n";
    char buf[128];
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", series.times[i],
                      series.values[i].real(), series.values[i].imag());
        out += buf;
    }
    return out;
}

}  // namespace pdc
