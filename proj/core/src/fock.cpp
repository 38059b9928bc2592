#include "pdc/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace pdc {

int r_charge(const FockLabel& label) { return label.n1 + 2 * label.n2; }

BlockCoord decompose(const FockLabel& label) {
    if (label.n1 < 0 || label.n2 < 0)
        throw std::invalid_argument("FockLabel: negative photon count");
    BlockCoord c;
    c.p = label.n1 % 2;
    c.k = (label.n1 - c.p) / 2;
    c.M = c.k + label.n2;
    return c;
}

FockLabel compose(const BlockCoord& coord) {
    if (coord.p != 0 && coord.p != 1)
        throw std::invalid_argument("BlockCoord: p must be 0 or 1");
    if (coord.k < 0 || coord.k > coord.M)
        throw std::invalid_argument("BlockCoord: k out of [0, M]");
    return FockLabel{2 * coord.k + coord.p, coord.M - coord.k};
}

int block_dim(int p, int M) {
    if (p != 0 && p != 1) throw std::invalid_argument("block_dim: p must be 0 or 1");
    if (M < 0) throw std::invalid_argument("block_dim: M must be non-negative");
    return M + 1;
}

StateVector StateVector::fock(int n1, int n2) {
    StateVector s;
    s.set(FockLabel{n1, n2}, Complex{1.0, 0.0});
    return s;
}

void StateVector::set(const FockLabel& label, Complex amplitude) {
    if (label.n1 < 0 || label.n2 < 0)
        throw std::invalid_argument("StateVector: negative photon count");
    if (amplitude == Complex{0.0, 0.0})
        amps_.erase(label);
    else
        amps_[label] = amplitude;
}

void StateVector::add(const FockLabel& label, Complex amplitude) {
    if (amplitude == Complex{0.0, 0.0}) return;
    set(label, this->amplitude(label) + amplitude);
}

Complex StateVector::amplitude(const FockLabel& label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto& [label, amp] : amps_) n2 += std::norm(amp);
    return std::sqrt(n2);
}

StateVector& StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("StateVector::normalize: zero state");
    for (auto& [label, amp] : amps_) amp /= n;
    return *this;
}

Complex inner(const StateVector& a, const StateVector& b) {
    // iterate the smaller map
    const StateVector& small = a.size() <= b.size() ? a : b;
    Complex sum{0.0, 0.0};
    if (&small == &a) {
        for (const auto& [label, amp] : a.amplitudes())
            sum += std::conj(amp) * b.amplitude(label);
    } else {
        for (const auto& [label, amp] : b.amplitudes())
            sum += std::conj(a.amplitude(label)) * amp;
    }
    return sum;
}

namespace {

// Smallest cutoff n such that the Poisson(mean) upper tail beyond n is below
// `tail`: Chernoff-bound first guess, then exact re-check by summation.
int poisson_cutoff(double mean, double tail) {
    if (mean <= 0.0) return 0;
    int n = static_cast<int>(std::ceil(mean));
    auto chernoff = [mean](int m) {
        // P(X >= m) <= exp(-mean) (e mean / m)^m for m > mean
        return std::exp(-mean + m - m * std::log(m / mean));
    };
    while (static_cast<double>(n) <= mean || chernoff(n) >= tail) ++n;
    // exact tail: 1 - sum_{j<=n} pmf(j)
    double pmf = std::exp(-mean);
    double cum = pmf;
    for (int j = 1; j <= n; ++j) {
        pmf *= mean / j;
        cum += pmf;
    }
    while (1.0 - cum >= tail) {
        ++n;
        pmf *= mean / n;
        cum += pmf;
        if (n > 1000000) throw std::runtime_error("poisson_cutoff: no convergence");
    }
    return n;
}

// Normalized single-mode coherent amplitudes e^{-|z|^2/2} z^n / sqrt(n!).
std::vector<Complex> mode_amplitudes(Complex z, int cutoff) {
    std::vector<Complex> amps(cutoff + 1);
    amps[0] = Complex{std::exp(-0.5 * std::norm(z)), 0.0};
    for (int n = 1; n <= cutoff; ++n) amps[n] = amps[n - 1] * z / std::sqrt(double(n));
    return amps;
}

}  // namespace

StateVector coherent_state(Complex z1, Complex z2, double tail_epsilon) {
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0))
        throw std::invalid_argument("coherent_state: tail_epsilon must be in (0, 1)");
    const int cut1 = poisson_cutoff(std::norm(z1), tail_epsilon / 2.0);
    const int cut2 = poisson_cutoff(std::norm(z2), tail_epsilon / 2.0);
    const auto a1 = mode_amplitudes(z1, cut1);
    const auto a2 = mode_amplitudes(z2, cut2);
    StateVector s;
    for (int n1 = 0; n1 <= cut1; ++n1)
        for (int n2 = 0; n2 <= cut2; ++n2) s.set(FockLabel{n1, n2}, a1[n1] * a2[n2]);
    return s.normalize();
}

std::string state_to_json(const StateVector& state, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [label, amp] : state.amplitudes()) {
        arr.push_back({{"n1", label.n1},
                       {"n2", label.n2},
                       {"re", amp.real()},
                       {"im", amp.imag()}});
    }
    return arr.dump(indent);
}

StateVector state_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("state_from_json: expected array");
    StateVector s;
    for (const auto& rec : arr) {
        s.add(FockLabel{rec.at("n1").get<int>(), rec.at("n2").get<int>()},
              Complex{rec.at("re").get<double>(), rec.at("im").get<double>()});
    }
    return s;
}

StateVector apply(const ObservableSpec& obs, const StateVector& psi) {
    if (!obs.element) throw std::invalid_argument("apply: observable has no element function");
    StateVector out;
    for (const auto& [ket, c] : psi.amplitudes()) {
        for (int d1 = -obs.band1; d1 <= obs.band1; ++d1) {
            for (int d2 = -obs.band2; d2 <= obs.band2; ++d2) {
                const FockLabel bra{ket.n1 + d1, ket.n2 + d2};
                if (bra.n1 < 0 || bra.n2 < 0) continue;
                const Complex v = obs.element(bra, ket);
                if (v != Complex{0.0, 0.0}) out.add(bra, v * c);
            }
        }
    }
    return out;
}

}  // namespace pdc
