#include "pdc/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "pdc/dual_hahn.hpp"
#include "pdc/symmetric_eigen.hpp"

namespace pdc {

namespace {

void require_resonance(const ModelParams& params) {
    const auto res = resonance_check(params, 1e-9);
    if (params.g == 0.0)
        throw std::domain_error("solve_analytic: g = 0 has no Dual Hahn form");
    if (!res.ok) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "solve_analytic: resonance conditions violated, residuals "
                      "(%.3e, %.3e, %.3e)",
                      res.residuals[0], res.residuals[1], res.residuals[2]);
        throw std::domain_error(buf);
    }
}

DualHahnParams block_dual_hahn_params(int p, int M) {
    return DualHahnParams{p - 0.5, 0.0, M};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

BlockEigensystem solve_analytic(const ModelParams& params, int p, int M) {
    require_resonance(params);
    const auto dh = block_dual_hahn_params(p, M);
    const auto lattice = dual_hahn_lattice(dh);
    const double g = params.g;
    const double shift = -2 * g * M * (p + 0.5) + params.omega1 * p + params.omega2 * M +
                         params.K1 * double(p) * p + params.K2 * double(M) * M;

    BlockEigensystem es;
    es.p = p;
    es.M = M;
    es.energies.resize(M + 1);
    for (int l = 0; l <= M; ++l) es.energies[l] = 2 * g * lattice[l] + shift;

    // W[l][k] = sqrt(rho_l) P_k(lambda_l); eigenvector components are the
    // transpose, vectors(k, l). Under resonance the block is exactly
    // 2g * (Dual Hahn Jacobi matrix) + C for either sign of g, so the Jacobi
    // eigenvectors carry over unchanged.
    const Mat w = dual_hahn_transform_matrix(dh);
    es.vectors = Mat(M + 1, M + 1);
    for (int k = 0; k <= M; ++k)
        for (int l = 0; l <= M; ++l) es.vectors(k, l) = w(l, k);

    if (g < 0.0) {
        // 2g lambda_l is then decreasing in l; restore ascending order.
        std::vector<double> energies(M + 1);
        Mat vectors(M + 1, M + 1);
        for (int l = 0; l <= M; ++l) {
            energies[l] = es.energies[M - l];
            for (int k = 0; k <= M; ++k) vectors(k, l) = es.vectors(k, M - l);
        }
        es.energies = std::move(energies);
        es.vectors = std::move(vectors);
    }
    return es;
}

BlockEigensystem solve_numeric(const TridiagonalBlock& block) {
    auto r = eigen_symmetric_tridiagonal(block.diag, block.offdiag);
    return BlockEigensystem{block.p, block.M, std::move(r.eigenvalues),
                            std::move(r.eigenvectors)};
}

BlockEigensystem solve_numeric(const Mat& dense_symmetric, int p, int M) {
    auto r = eigen_symmetric(dense_symmetric);
    if (M < 0) M = static_cast<int>(dense_symmetric.rows()) - 1;
    return BlockEigensystem{p, M, std::move(r.eigenvalues), std::move(r.eigenvectors)};
}

BlockEigensystem solve_block(const ModelParams& params, int p, int M) {
    if (params.g != 0.0 && resonance_check(params, 1e-9).ok)
        return solve_analytic(params, p, M);
    return solve_numeric(build_block_direct(params, p, M), p, M);
}

std::vector<double> fock_in_eigenbasis(const ModelParams& params, const BlockCoord& coord) {
    require_resonance(params);
    if (coord.k < 0 || coord.k > coord.M)
        throw std::invalid_argument("fock_in_eigenbasis: k out of [0, M]");
    const auto dh = block_dual_hahn_params(coord.p, coord.M);
    const auto weights = dual_hahn_weights(dh);
    std::vector<double> coeffs(coord.M + 1);
    for (int l = 0; l <= coord.M; ++l)
        coeffs[l] = std::sqrt(weights[l]) * dual_hahn_eval_recurrence(dh, coord.k, l);
    return coeffs;
}

std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows) {
    const bool with_deviation = !rows.empty() && rows.front().deviation >= 0.0;
    std::string out = with_deviation ? "p,M,l,energy,deviation\n" : "p,M,l,energy\n";
    for (const auto& r : rows) {
        out += std::to_string(r.p) + "," + std::to_string(r.M) + "," + std::to_string(r.l) +
               "," + format_double(r.energy);
        if (with_deviation) out += "," + format_double(r.deviation);
        out += "\n";
    }
    return out;
}

std::string spectrum_to_json(const std::vector<SpectrumRow>& rows, int indent) {
    // nested: blocks keyed by (p, M) in row order
    nlohmann::json blocks = nlohmann::json::array();
    int cur_p = -1, cur_M = -1;
    for (const auto& r : rows) {
        if (r.p != cur_p || r.M != cur_M) {
            blocks.push_back({{"p", r.p}, {"M", r.M}, {"energies", nlohmann::json::array()}});
            cur_p = r.p;
            cur_M = r.M;
        }
        auto& block = blocks.back();
        block["energies"].push_back(r.energy);
        if (r.deviation >= 0.0) {
            if (!block.contains("deviations")) block["deviations"] = nlohmann::json::array();
            block["deviations"].push_back(r.deviation);
        }
    }
    return nlohmann::json{{"blocks", blocks}}.dump(indent);
}

}  // namespace pdc
