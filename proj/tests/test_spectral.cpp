#include "doctest.h"

#include <cmath>
#include <random>

#include "pdc/dual_hahn.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/spectral.hpp"
#include "pdc/symmetric_eigen.hpp"

using namespace pdc;

namespace {
const ModelParams kResonance = resonance_params(1.0, 1.0);

double spectral_residual(const Mat& h, const BlockEigensystem& es) {
    const int n = static_cast<int>(h.rows());
    double worst = 0.0;
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            double hv = 0.0;
            for (int j = 0; j < n; ++j) hv += h(k, j) * es.vectors(j, l);
            worst = std::max(worst, std::abs(hv - es.energies[l] * es.vectors(k, l)));
        }
    return worst;
}
}  // namespace

TEST_CASE("numeric solver on the 2x2 example") {
    Mat h(2, 2);
    h(0, 0) = -1.0;
    h(0, 1) = h(1, 0) = std::sqrt(2.0);
    h(1, 1) = 0.0;
    const auto es = solve_numeric(h);
    CHECK(es.energies[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(es.energies[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_residual(h, es) < 1e-12);
}

TEST_CASE("numeric solver on a diagonal matrix") {
    Mat d(4, 4);
    const double vals[4] = {3.0, -1.0, 2.5, 0.0};
    for (int i = 0; i < 4; ++i) d(i, i) = vals[i];
    auto es = solve_numeric(d);
    CHECK(es.energies[0] == doctest::Approx(-1.0));
    CHECK(es.energies[1] == doctest::Approx(0.0));
    CHECK(es.energies[2] == doctest::Approx(2.5));
    CHECK(es.energies[3] == doctest::Approx(3.0));
    fix_column_signs(es.vectors);
    // columns are a permutation of the identity
    for (int j = 0; j < 4; ++j) {
        int ones = 0;
        for (int i = 0; i < 4; ++i) {
            if (std::abs(es.vectors(i, j) - 1.0) < 1e-12) ++ones;
            else CHECK(std::abs(es.vectors(i, j)) < 1e-12);
        }
        CHECK(ones == 1);
    }
}

TEST_CASE("numeric solver reproduces the dual Hahn lattice at N = 20") {
    const DualHahnParams dh{-0.5, 0.0, 20};
    const auto lattice = dual_hahn_lattice(dh);
    const auto es = solve_numeric(dual_hahn_jacobi_matrix(dh));
    for (int l = 0; l <= 20; ++l)
        CHECK(std::abs(es.energies[l] - lattice[l]) <= 1e-10 * std::max(1.0, lattice[l]));
}

TEST_CASE("numeric solver on random dense symmetric matrices") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> entry(-3.0, 3.0);
    for (int n : {1, 2, 5, 13, 34}) {
        Mat h(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) h(i, j) = h(j, i) = entry(rng);
        const auto es = solve_numeric(h);
        double scale = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(h(i, j)));
        CHECK(spectral_residual(h, es) <= 1e-12 * std::max(1.0, scale) * n);
        for (int l = 1; l < n; ++l) CHECK(es.energies[l] >= es.energies[l - 1]);
        // orthonormal eigenvectors
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += es.vectors(i, a) * es.vectors(i, b);
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12 * n);
            }
    }
}

TEST_CASE("analytic solver examples") {
    const auto es01 = solve_analytic(kResonance, 0, 1);
    CHECK(es01.energies[0] == doctest::Approx(-2.0));
    CHECK(es01.energies[1] == doctest::Approx(1.0));

    const auto es00 = solve_analytic(kResonance, 0, 0);
    CHECK(es00.energies[0] == doctest::Approx(0.0));

    const auto es10 = solve_analytic(kResonance, 1, 0);
    CHECK(es10.energies[0] == doctest::Approx(0.5));

    CHECK_THROWS_AS((void)solve_analytic({1.0, 2.0, 0.0, 0.0, 1.0}, 0, 1), std::domain_error);
}

TEST_CASE("analytic and numeric agree, including negative g") {
    for (double g : {1.0, -1.0, 0.35, -2.7}) {
        const ModelParams params = resonance_params(g, 1.0);
        for (int p = 0; p <= 1; ++p)
            for (int M : {0, 1, 5, 25}) {
                const auto analytic = solve_analytic(params, p, M);
                auto numeric = solve_numeric(build_block_direct(params, p, M), p, M);
                double max_e = 0.0;
                for (double e : analytic.energies) max_e = std::max(max_e, std::abs(e));
                Mat va = analytic.vectors;
                fix_column_signs(va);
                fix_column_signs(numeric.vectors);
                for (int l = 0; l <= M; ++l) {
                    CHECK(std::abs(analytic.energies[l] - numeric.energies[l]) <=
                          1e-8 * (1.0 + max_e));
                    for (int k = 0; k <= M; ++k)
                        CHECK(std::abs(va(k, l) - numeric.vectors(k, l)) < 1e-7);
                }
                const Mat h = build_block_direct(params, p, M);
                double h_max = 0.0;
                for (int i = 0; i <= M; ++i)
                    for (int j = 0; j <= M; ++j) h_max = std::max(h_max, std::abs(h(i, j)));
                CHECK(spectral_residual(h, analytic) <= 1e-10 * std::max(1.0, h_max));
            }
    }
}

TEST_CASE("eigenvalue count matches the Fock-state count up to a charge cutoff") {
    const int r_max = 24;
    int block_count = 0;
    for (int p = 0; p <= 1; ++p)
        for (int M = 0; 2 * M + p <= r_max; ++M) block_count += M + 1;
    int label_count = 0;
    for (int n1 = 0; n1 <= r_max; ++n1)
        for (int n2 = 0; n1 + 2 * n2 <= r_max; ++n2) ++label_count;
    CHECK(block_count == label_count);
}

TEST_CASE("trace and determinant match the spectrum") {
    for (int p = 0; p <= 1; ++p)
        for (int M : {1, 4, 9}) {
            const Mat h = build_block_direct(kResonance, p, M);
            const auto es = solve_analytic(kResonance, p, M);
            double trace = 0.0;
            for (int k = 0; k <= M; ++k) trace += h(k, k);
            double esum = 0.0, eprod = 1.0;
            for (double e : es.energies) {
                esum += e;
                eprod *= e;
            }
            CHECK(std::abs(trace - esum) <= 1e-9 * std::max(1.0, std::abs(esum)));
            // determinant via LU-free route: product of numeric eigenvalues
            const auto numeric = solve_numeric(h);
            double nprod = 1.0;
            for (double e : numeric.energies) nprod *= e;
            CHECK(std::abs(eprod - nprod) <= 1e-9 * std::max(1.0, std::abs(eprod)));
        }
}

TEST_CASE("fock_in_eigenbasis examples") {
    const auto c = fock_in_eigenbasis(kResonance, {0, 1, 0});
    CHECK(c[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(c[1] == doctest::Approx(std::sqrt(1.0 / 3.0)));

    const auto vac = fock_in_eigenbasis(kResonance, {0, 0, 0});
    CHECK(vac.size() == 1);
    CHECK(vac[0] == doctest::Approx(1.0));

    for (int p = 0; p <= 1; ++p)
        for (int M : {0, 2, 8})
            for (int k = 0; k <= M; ++k) {
                const auto row = fock_in_eigenbasis(kResonance, {p, M, k});
                double s = 0.0;
                for (double v : row) s += v * v;
                CHECK(std::abs(s - 1.0) < 1e-12);
            }
}

TEST_CASE("spectrum CSV export") {
    const std::vector<SpectrumRow> rows{{0, 1, 0, -2.0, 1e-12}, {0, 1, 1, 1.0, 1e-12}};
    const auto csv = spectrum_to_csv(rows);
    CHECK(csv.rfind("p,M,l,energy,deviation\n", 0) == 0);
    CHECK(csv.find("0,1,0,-2") != std::string::npos);

    const std::vector<SpectrumRow> plain{{1, 0, 0, 0.5, -1.0}};
    CHECK(spectrum_to_csv(plain).rfind("p,M,l,energy\n", 0) == 0);
}
