#include "doctest.h"

#include <cmath>

#include "pdc/dual_hahn.hpp"
#include "pdc/symmetric_eigen.hpp"

#include "oracles.hpp"

using namespace pdc;

TEST_CASE("lattice examples") {
    const auto a = dual_hahn_lattice({-0.5, 0.0, 2});
    CHECK(a[0] == 0.0);
    CHECK(a[1] == doctest::Approx(1.5));
    CHECK(a[2] == doctest::Approx(5.0));

    const auto b = dual_hahn_lattice({0.5, 0.0, 2});
    CHECK(b[0] == 0.0);
    CHECK(b[1] == doctest::Approx(2.5));
    CHECK(b[2] == doctest::Approx(7.0));

    CHECK_THROWS(dual_hahn_lattice({-1.5, 0.0, 2}));
}

TEST_CASE("recurrence coefficient examples") {
    const DualHahnParams p{-0.5, 0.0, 1};
    const auto c0 = dual_hahn_recurrence_coeffs(p, 0);
    CHECK(c0.a == doctest::Approx(0.5));
    CHECK(c0.b == doctest::Approx(std::sqrt(0.5)));
    const auto c1 = dual_hahn_recurrence_coeffs(p, 1);
    CHECK(c1.a == doctest::Approx(1.0));
    CHECK(c1.b == 0.0);  // factor N - k
    CHECK_THROWS(dual_hahn_recurrence_coeffs(p, 2));
}

TEST_CASE("weight examples") {
    const auto w = dual_hahn_weights({-0.5, 0.0, 1});
    CHECK(w[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto single = dual_hahn_weights({0.5, 0.0, 0});
    CHECK(single.size() == 1);
    CHECK(single[0] == doctest::Approx(1.0));
}

TEST_CASE("weights match the literal signed product for small N") {
    for (double gamma : {-0.5, 0.5})
        for (int N : {1, 3, 7}) {
            const auto w = dual_hahn_weights({gamma, 0.0, N});
            for (int l = 0; l <= N; ++l)
                CHECK(w[l] == doctest::Approx(oracles::dual_hahn_weight_direct(l, gamma, 0.0, N))
                                  .epsilon(1e-11));
        }
}

TEST_CASE("weights sum to one for delta = 0") {
    for (double gamma : {-0.5, 0.5})
        for (int N = 0; N <= 50; ++N) {
            const auto w = dual_hahn_weights({gamma, 0.0, N});
            double sum = 0.0;
            for (double rho : w) {
                CHECK(rho > 0.0);
                sum += rho;
            }
            CHECK(std::abs(sum - 1.0) < 1e-10);
        }
}

TEST_CASE("recurrence evaluation examples") {
    const DualHahnParams p{-0.5, 0.0, 1};
    CHECK(dual_hahn_eval_recurrence(p, 1, 0) == doctest::Approx(-std::sqrt(0.5)));
    CHECK(dual_hahn_eval_recurrence(p, 1, 1) == doctest::Approx(std::sqrt(2.0)));

    // P0 constant over the lattice
    const DualHahnParams q{0.5, 0.0, 4};
    const double p0 = dual_hahn_eval_recurrence(q, 0, 0);
    for (int l = 1; l <= 4; ++l) CHECK(dual_hahn_eval_recurrence(q, 0, l) == p0);

    // sum_l rho_l P1^2 = 1
    const auto w = dual_hahn_weights(p);
    const double s = w[0] * 0.5 + w[1] * 2.0;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hypergeometric evaluation examples") {
    const DualHahnParams p{-0.5, 0.0, 1};
    CHECK(dual_hahn_eval_hypergeometric(p, 1, 0) == doctest::Approx(std::sqrt(0.5)));
    CHECK(dual_hahn_eval_hypergeometric(p, 1, 1) == doctest::Approx(-std::sqrt(2.0)));
    // k = 0 is the bare prefactor, equal to 1 at delta = 0
    CHECK(dual_hahn_eval_hypergeometric(p, 0, 0) == doctest::Approx(1.0));
    CHECK(dual_hahn_eval_hypergeometric(p, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("recurrence vs hypergeometric differ by (-1)^k") {
    for (double gamma : {-0.5, 0.5})
        for (int N = 0; N <= 30; ++N) {
            const DualHahnParams p{gamma, 0.0, N};
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    const double rec = dual_hahn_eval_recurrence(p, k, l);
                    const double hyp = dual_hahn_eval_hypergeometric(p, k, l);
                    const double sign = k % 2 == 0 ? 1.0 : -1.0;
                    CHECK(std::abs(rec - sign * hyp) <= 1e-9 * std::max(1.0, std::abs(rec)));
                }
        }
}

TEST_CASE("transform matrix examples") {
    const Mat w1 = dual_hahn_transform_matrix({-0.5, 0.0, 1});
    CHECK(w1(0, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(w1(0, 1) == doctest::Approx(-std::sqrt(1.0 / 3.0)));
    CHECK(w1(1, 0) == doctest::Approx(std::sqrt(1.0 / 3.0)));
    CHECK(w1(1, 1) == doctest::Approx(std::sqrt(2.0 / 3.0)));

    const Mat w0 = dual_hahn_transform_matrix({0.5, 0.0, 0});
    CHECK(w0(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("transform matrix orthonormality") {
    for (double gamma : {-0.5, 0.5})
        for (int N : {1, 5, 20, 50}) {
            const Mat w = dual_hahn_transform_matrix({gamma, 0.0, N});
            const Mat wtw = w.transposed() * w;
            const Mat wwt = w * w.transposed();
            double worst = 0.0;
            for (int i = 0; i <= N; ++i)
                for (int j = 0; j <= N; ++j) {
                    const double id = i == j ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(wtw(i, j) - id));
                    worst = std::max(worst, std::abs(wwt(i, j) - id));
                }
            CHECK(worst < 1e-10);
        }
}

TEST_CASE("Jacobi matrix spectrum is the lattice") {
    for (double gamma : {-0.5, 0.5})
        for (int N : {1, 10, 50}) {
            const DualHahnParams p{gamma, 0.0, N};
            const auto lattice = dual_hahn_lattice(p);
            const auto eig = eigen_symmetric(dual_hahn_jacobi_matrix(p));
            for (int l = 0; l <= N; ++l)
                CHECK(std::abs(eig.eigenvalues[l] - lattice[l]) <=
                      1e-10 * std::max(1.0, std::abs(lattice[l])));
        }
}

TEST_CASE("weight overflow guard") {
    CHECK_THROWS_AS((void)dual_hahn_weights({0.5, 0.0, 20000}), std::overflow_error);
}
