#pragma once

#include <string>
#include <vector>

#include "pdc/fock.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/matrix.hpp"

namespace pdc {

// Full eigensystem of one Hamiltonian block. Column l of `vectors` holds the
// components of the l-th eigenvector over the basis {|2k+p, M-k>}.
struct BlockEigensystem {
    int p = 0;
    int M = 0;
    std::vector<double> energies;  // ascending
    Mat vectors;                   // (M+1) x (M+1), orthogonal
};

// Analytic diagonalization via Dual Hahn with gamma = p - 1/2, delta = 0,
// N = M. Requires the resonance conditions (within 1e-9) and g != 0; throws
// std::domain_error with the residuals otherwise.
BlockEigensystem solve_analytic(const ModelParams& params, int p, int M);

// Numeric diagonalization via the in-repo tridiagonal QL solver.
BlockEigensystem solve_numeric(const TridiagonalBlock& block);
BlockEigensystem solve_numeric(const Mat& dense_symmetric, int p = 0, int M = -1);

// Analytic when resonant and g != 0, numeric on build_block_direct otherwise.
BlockEigensystem solve_block(const ModelParams& params, int p, int M);

// Components of |2k+p, M-k> in the block eigenbasis:
// coefficient[l] = sqrt(rho_M(l; p-1/2, 0)) P_k(lambda_l).
std::vector<double> fock_in_eigenbasis(const ModelParams& params, const BlockCoord& coord);

// Spectrum export.
struct SpectrumRow {
    int p = 0;
    int M = 0;
    int l = 0;
    double energy = 0.0;
    double deviation = -1.0;  // analytic vs numeric; < 0 when not computed
};

std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows);
std::string spectrum_to_json(const std::vector<SpectrumRow>& rows, int indent = -1);

}  // namespace pdc
