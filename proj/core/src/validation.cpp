#include "pdc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>

#include "pdc/dual_hahn.hpp"
#include "pdc/dynamics.hpp"
#include "pdc/fock.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/observables.hpp"
#include "pdc/parallel.hpp"
#include "pdc/spectral.hpp"
#include "pdc/symmetric_eigen.hpp"

namespace pdc {

namespace {

// Accumulates the worst residual across (possibly parallel) checks.
class Worst {
public:
    void update(double r) {
        std::lock_guard<std::mutex> lock(mutex_);
        value_ = std::max(value_, r);
    }
    double value() const { return value_; }

private:
    std::mutex mutex_;
    double value_ = 0.0;
};

FamilyResult make_result(std::string name, double worst, double tol) {
    return FamilyResult{std::move(name), worst, tol, worst <= tol};
}

FamilyResult check_fock_roundtrip(const ValidationOptions&) {
    double worst = 0.0;
    // round trip + charge consistency + block partition over n1, n2 <= 64.
    // A label (n1, n2) sits in block M = n1/2 + n2, so M must run to 96 to
    // reach every label in the checked square.
    std::vector<std::vector<bool>> covered(129, std::vector<bool>(129, false));
    for (int p = 0; p <= 1; ++p)
        for (int M = 0; M <= 96; ++M)
            for (int k = 0; k <= M; ++k) {
                const auto label = compose(BlockCoord{p, M, k});
                if (!(decompose(label) == BlockCoord{p, M, k})) worst = 1.0;
                if (r_charge(label) != 2 * M + p) worst = 1.0;
                if (label.n1 <= 128 && label.n2 <= 128) {
                    if (covered[label.n1][label.n2]) worst = 1.0;  // overlap
                    covered[label.n1][label.n2] = true;
                }
            }
    for (int n1 = 0; n1 <= 64; ++n1)
        for (int n2 = 0; n2 <= 64; ++n2) {
            const FockLabel label{n1, n2};
            if (!(compose(decompose(label)) == label)) worst = 1.0;
            if (!covered[n1][n2]) worst = 1.0;  // not reached by any block
        }
    return make_result("fock-roundtrip-partition", worst, 0.0);
}

FamilyResult check_orthonormality(const ValidationOptions& options) {
    Worst worst;
    const int max_N = std::min(options.max_M, 50);
    parallel_for(max_N + 1, [&](int N) {
        for (double gamma : {-0.5, 0.5}) {
            const DualHahnParams dh{gamma, 0.0, N};
            Mat w = dual_hahn_transform_matrix(dh);
            if (options.corrupt_weights) {
                // scale one row as if its weight were off by 1%
                const int l = N / 2;
                for (int k = 0; k <= N; ++k) w(l, k) *= std::sqrt(1.01);
            }
            const Mat wtw = w.transposed() * w;
            const Mat wwt = w * w.transposed();
            double r = 0.0;
            for (int i = 0; i <= N; ++i)
                for (int j = 0; j <= N; ++j) {
                    const double id = i == j ? 1.0 : 0.0;
                    r = std::max(r, std::abs(wtw(i, j) - id));
                    r = std::max(r, std::abs(wwt(i, j) - id));
                }
            // weight positivity and sum = 1 at delta = 0
            const auto weights = dual_hahn_weights(dh);
            double sum = 0.0;
            for (double rho : weights) {
                if (!(rho > 0.0)) r = std::max(r, 1.0);
                sum += rho;
            }
            r = std::max(r, std::abs(sum - 1.0));
            worst.update(r);
        }
    });
    return make_result("dual-hahn-orthonormality", worst.value(), 1e-10);
}

FamilyResult check_dual_evaluation(const ValidationOptions& options) {
    Worst worst;
    const int max_N = std::min(options.max_M, 30);
    parallel_for(max_N + 1, [&](int N) {
        for (double gamma : {-0.5, 0.5}) {
            const DualHahnParams dh{gamma, 0.0, N};
            double r = 0.0;
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    const double rec = dual_hahn_eval_recurrence(dh, k, l);
                    const double hyp = dual_hahn_eval_hypergeometric(dh, k, l);
                    const double sign = k % 2 == 0 ? 1.0 : -1.0;
                    r = std::max(r, std::abs(rec - sign * hyp) / std::max(1.0, std::abs(rec)));
                }
            worst.update(r);
        }
    });
    return make_result("dual-evaluation-consistency", worst.value(), 1e-9);
}

FamilyResult check_jacobi_identity(const ValidationOptions& options) {
    Worst worst;
    const int max_N = std::min(options.max_M, 50);
    parallel_for(max_N + 1, [&](int N) {
        for (double gamma : {-0.5, 0.5}) {
            const DualHahnParams dh{gamma, 0.0, N};
            const auto lattice = dual_hahn_lattice(dh);
            const auto eig = eigen_symmetric(dual_hahn_jacobi_matrix(dh));
            double r = 0.0;
            for (int l = 0; l <= N; ++l)
                r = std::max(r, std::abs(eig.eigenvalues[l] - lattice[l]) /
                                    std::max(1.0, std::abs(lattice[l])));
            worst.update(r);
        }
    });
    return make_result("jacobi-spectral-identity", worst.value(), 1e-10);
}

FamilyResult check_construction_equivalence(const ValidationOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::uniform_real_distribution<double> log_g(std::log(1e-3), std::log(10.0));
    std::uniform_int_distribution<int> pick_M(0, std::min(options.max_M, 40));
    std::uniform_int_distribution<int> sign(0, 1);

    struct Trial {
        ModelParams params;
        int p, M;
    };
    std::vector<Trial> trials(std::max(options.trials, 1));
    for (auto& t : trials) {
        t.params = ModelParams{coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                               (sign(rng) ? 1.0 : -1.0) * std::exp(log_g(rng))};
        t.p = sign(rng);
        t.M = pick_M(rng);
    }

    Worst worst;
    parallel_for(static_cast<int>(trials.size()), [&](int i) {
        const auto& t = trials[i];
        const Mat direct = build_block_direct(t.params, t.p, t.M);
        const Mat formula = build_block_formula(t.params, t.p, t.M).to_dense();
        double scale = 0.0;
        for (int a = 0; a <= t.M; ++a)
            for (int b = 0; b <= t.M; ++b) scale = std::max(scale, std::abs(direct(a, b)));
        double r = 0.0;
        for (int a = 0; a <= t.M; ++a)
            for (int b = 0; b <= t.M; ++b)
                r = std::max(r, std::abs(direct(a, b) - formula(a, b)));
        worst.update(r / std::max(1.0, scale));
    });
    return make_result("construction-equivalence", worst.value(), 1e-10);
}

FamilyResult check_spectra(const ValidationOptions& options) {
    const ModelParams params = resonance_params(1.0, 1.0);
    const int max_M = std::min(options.max_M, 50);
    Worst worst;
    parallel_for(max_M + 1, [&](int M) {
        for (int p = 0; p <= 1; ++p) {
            const auto analytic = solve_analytic(params, p, M);
            auto numeric = solve_numeric(build_block_direct(params, p, M), p, M);
            double max_e = 0.0;
            for (double e : analytic.energies) max_e = std::max(max_e, std::abs(e));
            Mat va = analytic.vectors;
            fix_column_signs(va);
            fix_column_signs(numeric.vectors);
            double r = 0.0;
            for (int l = 0; l <= M; ++l) {
                r = std::max(r, std::abs(analytic.energies[l] - numeric.energies[l]) /
                                    (1.0 + max_e) * 10.0);  // scale into the vector tolerance
                for (int k = 0; k <= M; ++k)
                    r = std::max(r, std::abs(va(k, l) - numeric.vectors(k, l)));
            }
            worst.update(r);
        }
    });
    return make_result("spectrum-analytic-vs-numeric", worst.value(), 1e-7);
}

FamilyResult check_propagator_algebra(const ValidationOptions& options) {
    const ModelParams params = resonance_params(1.0, 1.0);
    std::mt19937_64 rng(options.seed + 1);
    std::uniform_int_distribution<int> pick_M(0, std::min(options.max_M, 40));
    std::uniform_int_distribution<int> pick_p(0, 1);
    std::uniform_real_distribution<double> pick_t(0.0, 100.0);

    const int n_trials = 24;
    struct Trial {
        int p, M;
        double t, s;
    };
    std::vector<Trial> trials(n_trials);
    for (auto& t : trials) t = Trial{pick_p(rng), pick_M(rng), pick_t(rng), pick_t(rng)};

    BlockSolver solver(params);
    for (const auto& t : trials) solver.block(t.p, t.M);  // warm cache before parallel use

    Worst worst;
    parallel_for(n_trials, [&](int i) {
        const auto& trial = trials[i];
        const int n = trial.M + 1;
        const auto ut = propagator_block(solver, trial.p, trial.M, trial.t);
        const auto us = propagator_block(solver, trial.p, trial.M, trial.s);
        const auto uts = propagator_block(solver, trial.p, trial.M, trial.t + trial.s);
        double r = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Complex unit{0.0, 0.0};
                Complex prod{0.0, 0.0};
                for (int c = 0; c < n; ++c) {
                    unit += ut.entries(a, c) * std::conj(ut.entries(b, c));
                    prod += ut.entries(a, c) * us.entries(c, b);
                }
                const double id = a == b ? 1.0 : 0.0;
                r = std::max(r, std::abs(unit - Complex{id, 0.0}));
                r = std::max(r, std::abs(prod - uts.entries(a, b)));
            }
        worst.update(r);
    });
    return make_result("propagator-algebra", worst.value(), 1e-9);
}

FamilyResult check_conservation(const ValidationOptions& options) {
    const ModelParams params = resonance_params(1.0, 1.0);
    std::mt19937_64 rng(options.seed + 2);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_n1(0, 30);
    std::uniform_real_distribution<double> pick_t(0.0, 100.0);

    const auto n1_obs = observables::photon_number_1();
    const auto r_obs = observables::charge();
    const auto p_obs = observables::parity();
    const auto h_obs = observables::hamiltonian(params);

    Worst worst;
    for (int trial = 0; trial < 20; ++trial) {
        StateVector psi;
        for (int j = 0; j < 12; ++j) {
            const int n1 = pick_n1(rng);
            const int n2 = (30 - n1) / 2 > 0 ? std::uniform_int_distribution<int>(
                                                   0, (30 - n1) / 2)(rng)
                                             : 0;
            psi.add(FockLabel{n1, n2}, Complex{amp(rng), amp(rng)});
        }
        psi.normalize();
        BlockSolver solver(params);
        const double r0 = inner(psi, apply(r_obs, psi)).real();
        const double p0 = inner(psi, apply(p_obs, psi)).real();
        const double h0 = inner(psi, apply(h_obs, psi)).real();
        for (int j = 0; j < 4; ++j) {
            const double t = pick_t(rng);
            const StateVector psi_t = evolve(solver, psi, t);
            worst.update(std::abs(psi_t.norm() - 1.0));
            worst.update(std::abs(inner(psi_t, apply(r_obs, psi_t)).real() - r0));
            worst.update(std::abs(inner(psi_t, apply(p_obs, psi_t)).real() - p0));
            worst.update(std::abs(inner(psi_t, apply(h_obs, psi_t)).real() - h0));
            worst.update(std::abs(inner(psi_t, apply(n1_obs, psi_t)).imag()));
        }
    }
    return make_result("conservation", worst.value(), 1e-9);
}

FamilyResult check_dynamics_cross_formula(const ValidationOptions& options) {
    const ModelParams params = resonance_params(1.0, 1.0);
    std::mt19937_64 rng(options.seed + 3);
    std::uniform_real_distribution<double> pick_t(0.0, 20.0);
    std::vector<double> times(5);
    for (auto& t : times) t = pick_t(rng);

    const auto n1_obs = observables::photon_number_1();
    const int max_M = std::min(options.max_M, 15);
    Worst worst;
    parallel_for(max_M + 1, [&](int M) {
        BlockSolver solver(params);
        for (int p = 0; p <= 1; ++p)
            for (int l = 0; l <= M; ++l) {
                const auto label = compose(BlockCoord{p, M, l});
                const auto psi = StateVector::fock(label.n1, label.n2);
                for (double t : times) {
                    const double direct = expect_n1_fock(params, l, p, M, t);
                    const double block = expectation(solver, psi, n1_obs, t).real();
                    worst.update(std::abs(direct - block));
                }
            }
    });
    return make_result("dynamics-cross-formula", worst.value(), 1e-9);
}

}  // namespace

bool ValidationReport::all_pass() const {
    return std::all_of(families.begin(), families.end(),
                       [](const FamilyResult& f) { return f.pass; });
}

ValidationReport run_validation(const ValidationOptions& options) {
    ValidationReport report;
    report.families.push_back(check_fock_roundtrip(options));
    report.families.push_back(check_orthonormality(options));
    report.families.push_back(check_dual_evaluation(options));
    report.families.push_back(check_jacobi_identity(options));
    report.families.push_back(check_construction_equivalence(options));
    report.families.push_back(check_spectra(options));
    report.families.push_back(check_propagator_algebra(options));
    report.families.push_back(check_conservation(options));
    report.families.push_back(check_dynamics_cross_formula(options));
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::string out;
    char buf[160];
    for (const auto& f : report.families) {
        std::snprintf(buf, sizeof(buf), "%-32s %s  worst %.3e  (tol %.1e)\n", f.name.c_str(),
                      f.pass ? "PASS" : "FAIL", f.worst_residual, f.tolerance);
        out += buf;
    }
    out += report.all_pass() ? "all families passed\n" : "VALIDATION FAILED\n";
    return out;
}

}  // namespace pdc
