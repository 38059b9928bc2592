#pragma once

#include <array>
#include <string>
#include <vector>

#include "pdc/matrix.hpp"

namespace pdc {

// The five real Hamiltonian constants (hbar = 1):
//   H = omega1 n1 + omega2 n2 + K1 n1^2 + K2 n2^2
//       + g (sqrt(n2) a1^2 a2* + a1*^2 a2 sqrt(n2))
struct ModelParams {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double K1 = 0.0;
    double K2 = 0.0;
    double g = 0.0;
};

// Parse from a JSON object with required numeric keys omega1, omega2, K1, K2, g.
ModelParams params_from_json(const std::string& text);
ModelParams params_from_json_file(const std::string& path);
std::string params_to_json(const ModelParams& params);

// One finite Hamiltonian block: diag[k] = 2g a_k + C, offdiag[k] = 2g b_k,
// shift = C_{p,M}.
struct TridiagonalBlock {
    int p = 0;
    int M = 0;
    std::vector<double> diag;     // M+1 entries
    std::vector<double> offdiag;  // M entries
    double shift = 0.0;

    Mat to_dense() const;
};

// Block matrix from ladder-operator matrix elements on |2k+p, M-k>.
// Works for all parameter values including g = 0.
Mat build_block_direct(const ModelParams& params, int p, int M);

// Block from the closed-form coefficients a_k, b_k and constant C_{p,M}.
// Requires g != 0 (the coefficients divide by 2g); throws std::domain_error
// otherwise, directing the caller to build_block_direct.
TridiagonalBlock build_block_formula(const ModelParams& params, int p, int M);

// Residuals of the three resonance conditions
//   2 omega1 - omega2 - g = 0,  2 K1 + g = 0,  K2 + 2 g = 0.
struct ResonanceResult {
    std::array<double, 3> residuals{};
    bool ok = false;  // all residuals within tol AND g != 0
};

ResonanceResult resonance_check(const ModelParams& params, double tol = 1e-9);

// The resonance surface has two free parameters; construct the full set from
// (g, omega1). Rejects g = 0.
ModelParams resonance_params(double g, double omega1);

}  // namespace pdc
