#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

namespace pdc {

using Complex = std::complex<double>;

// Two-mode number state |n1, n2>.
struct FockLabel {
    int n1 = 0;
    int n2 = 0;
    friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

// Position of a Fock vector inside the invariant-subspace decomposition:
// the block (p, M) is spanned by |2k+p, M-k>, k = 0..M.
struct BlockCoord {
    int p = 0;  // parity of n1, in {0, 1}
    int M = 0;  // charge index, (n1 + 2 n2 - p) / 2
    int k = 0;  // ladder index within the block, 0 <= k <= M
    friend bool operator==(const BlockCoord&, const BlockCoord&) = default;
};

// Eigenvalue of the conserved charge R = n1 + 2 n2.
int r_charge(const FockLabel& label);

BlockCoord decompose(const FockLabel& label);
FockLabel compose(const BlockCoord& coord);

// dim H_{p,M} = M + 1
int block_dim(int p, int M);

// Canonical label ordering: by conserved charge, then by n1. This is also
// the serialization order.
struct FockOrder {
    bool operator()(const FockLabel& a, const FockLabel& b) const {
        const int ra = a.n1 + 2 * a.n2;
        const int rb = b.n1 + 2 * b.n2;
        if (ra != rb) return ra < rb;
        return a.n1 < b.n1;
    }
};

// Block-sparse state over the two-mode Fock basis.
class StateVector {
public:
    using Map = std::map<FockLabel, Complex, FockOrder>;

    StateVector() = default;

    static StateVector fock(int n1, int n2);

    void set(const FockLabel& label, Complex amplitude);
    void add(const FockLabel& label, Complex amplitude);
    Complex amplitude(const FockLabel& label) const;

    double norm() const;
    StateVector& normalize();  // throws std::domain_error on zero norm

    const Map& amplitudes() const { return amps_; }
    std::size_t size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }

private:
    Map amps_;
};

// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

// Normalized two-mode coherent state truncated so that the discarded
// probability mass is below tail_epsilon, then renormalized to unit norm.
// tail_epsilon must lie in (0, 1).
StateVector coherent_state(Complex z1, Complex z2, double tail_epsilon);

// JSON serialization: array of {n1, n2, re, im} records in canonical order.
std::string state_to_json(const StateVector& state, int indent = -1);
StateVector state_from_json(const std::string& text);

// Observable given by banded matrix elements <n1', n2'| X |n1, n2>,
// nonzero only for |n1' - n1| <= band1 and |n2' - n2| <= band2.
struct ObservableSpec {
    std::string name;
    int band1 = 0;
    int band2 = 0;
    bool hermitian = true;
    std::function<Complex(const FockLabel& bra, const FockLabel& ket)> element;
};

// X |psi>, expanding the support by one bandwidth.
StateVector apply(const ObservableSpec& obs, const StateVector& psi);

}  // namespace pdc
