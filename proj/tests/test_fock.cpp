#include "doctest.h"

#include <cmath>
#include <set>

#include "pdc/fock.hpp"

#include "oracles.hpp"

using namespace pdc;

TEST_CASE("decompose examples") {
    CHECK(decompose({0, 0}) == BlockCoord{0, 0, 0});
    CHECK(decompose({3, 2}) == BlockCoord{1, 3, 1});
    CHECK(decompose({2, 0}) == BlockCoord{0, 1, 1});
}

TEST_CASE("compose examples") {
    CHECK(compose({0, 0, 0}) == FockLabel{0, 0});
    CHECK(compose({1, 3, 1}) == FockLabel{3, 2});
    CHECK(compose({1, 0, 0}) == FockLabel{1, 0});
    CHECK_THROWS(compose({2, 0, 0}));
    CHECK_THROWS(compose({0, 1, 2}));
}

TEST_CASE("r_charge examples") {
    CHECK(r_charge({0, 0}) == 0);
    CHECK(r_charge({3, 2}) == 7);
    CHECK(r_charge({2, 0}) == 2);
}

TEST_CASE("block_dim") {
    CHECK(block_dim(0, 0) == 1);
    CHECK(block_dim(1, 3) == 4);
    CHECK(block_dim(0, 10) == 11);
    CHECK_THROWS(block_dim(2, 0));
    CHECK_THROWS(block_dim(0, -1));
}

TEST_CASE("round trip and charge consistency up to 64") {
    for (int n1 = 0; n1 <= 64; ++n1)
        for (int n2 = 0; n2 <= 64; ++n2) {
            const FockLabel label{n1, n2};
            CHECK(compose(decompose(label)) == label);
        }
    for (int p = 0; p <= 1; ++p)
        for (int M = 0; M <= 64; ++M)
            for (int k = 0; k <= M; ++k) {
                const BlockCoord c{p, M, k};
                CHECK(decompose(compose(c)) == c);
                CHECK(r_charge(compose(c)) == 2 * M + p);
            }
}

TEST_CASE("blocks partition the Fock lattice") {
    std::set<std::pair<int, int>> seen;
    for (int p = 0; p <= 1; ++p)
        for (int M = 0; M <= 40; ++M)
            for (int k = 0; k <= M; ++k) {
                const auto label = compose({p, M, k});
                CHECK(seen.insert({label.n1, label.n2}).second);
            }
    // every label with n1 <= 20, n2 <= 20 is covered by some block above
    for (int n1 = 0; n1 <= 20; ++n1)
        for (int n2 = 0; n2 <= 20; ++n2) CHECK(seen.count({n1, n2}) == 1);
}

TEST_CASE("inner product") {
    const auto vac = StateVector::fock(0, 0);
    CHECK(inner(vac, vac) == Complex{1.0, 0.0});
    CHECK(inner(StateVector::fock(0, 1), StateVector::fock(2, 0)) == Complex{0.0, 0.0});

    StateVector scaled;
    const Complex c{0.3, -0.7};
    scaled.set({0, 0}, c);
    CHECK(inner(scaled, vac) == std::conj(c));
    CHECK(inner(vac, scaled) == c);
}

TEST_CASE("coherent state vacuum") {
    const auto psi = coherent_state({0, 0}, {0, 0}, 1e-10);
    CHECK(psi.size() == 1);
    CHECK(std::abs(psi.amplitude({0, 0}) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("coherent state z1=1 Poisson amplitudes") {
    const auto psi = coherent_state({1, 0}, {0, 0}, 1e-12);
    CHECK(psi.amplitude({0, 0}).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
    double fact = 1.0;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        CHECK(psi.amplitude({n, 0}).real() ==
              doctest::Approx(std::exp(-0.5) / std::sqrt(fact)).epsilon(1e-9));
        CHECK(psi.amplitude({n, 0}).imag() == 0.0);
    }
}

TEST_CASE("coherent state normalization and truncation mass") {
    for (double eps : {1e-6, 1e-10}) {
        for (Complex z1 : {Complex{1.5, 0.5}, Complex{0.0, 2.0}}) {
            const Complex z2{0.7, -1.1};
            const auto psi = coherent_state(z1, z2, eps);
            CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
            // rebuild the pre-normalization mass from Poisson tails
            int max_n1 = 0, max_n2 = 0;
            for (const auto& [label, amp] : psi.amplitudes()) {
                max_n1 = std::max(max_n1, label.n1);
                max_n2 = std::max(max_n2, label.n2);
            }
            const double discarded =
                1.0 - (1.0 - oracles::poisson_upper_tail(std::norm(z1), max_n1)) *
                          (1.0 - oracles::poisson_upper_tail(std::norm(z2), max_n2));
            CHECK(discarded < eps);
        }
    }
    CHECK_THROWS(coherent_state({1, 0}, {0, 0}, 0.0));
    CHECK_THROWS(coherent_state({1, 0}, {0, 0}, 1.0));
    CHECK_THROWS(coherent_state({1, 0}, {0, 0}, -0.5));
}

TEST_CASE("state JSON round trip preserves canonical order") {
    StateVector psi;
    psi.set({2, 1}, {0.5, 0.0});
    psi.set({0, 0}, {0.1, -0.2});
    psi.set({1, 0}, {0.0, 0.3});
    psi.set({4, 0}, {0.2, 0.0});

    const auto text = state_to_json(psi);
    const auto back = state_from_json(text);
    CHECK(back.size() == psi.size());
    for (const auto& [label, amp] : psi.amplitudes())
        CHECK(std::abs(back.amplitude(label) - amp) < 1e-15);

    // (2,1) and (4,0) share charge 4; (2,1) must come first (smaller n1)
    const auto pos21 = text.find("\"n1\":2");
    const auto pos40 = text.find("\"n1\":4");
    CHECK(pos21 != std::string::npos);
    CHECK(pos40 != std::string::npos);
    CHECK(pos21 < pos40);
}

TEST_CASE("observable apply respects hermiticity flag sampling") {
    ObservableSpec obs;
    obs.name = "shift";
    obs.band1 = 1;
    obs.hermitian = true;
    obs.element = [](const FockLabel& bra, const FockLabel& ket) -> Complex {
        if (bra.n2 != ket.n2) return {0.0, 0.0};
        if (bra.n1 == ket.n1 + 1) return {std::sqrt(double(ket.n1 + 1)), 0.0};
        if (bra.n1 == ket.n1 - 1) return {std::sqrt(double(ket.n1)), 0.0};
        return {0.0, 0.0};
    };
    // Hermiticity on sampled pairs
    for (int n1 = 0; n1 <= 5; ++n1) {
        const FockLabel a{n1, 0}, b{n1 + 1, 0};
        CHECK(obs.element(a, b) == std::conj(obs.element(b, a)));
    }
    const auto out = apply(obs, StateVector::fock(1, 0));
    CHECK(std::abs(out.amplitude({0, 0}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(out.amplitude({2, 0}) - Complex{std::sqrt(2.0), 0.0}) < 1e-15);
}
