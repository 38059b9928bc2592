#include "pdc/hamiltonian.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace pdc {

namespace {

void check_block_labels(int p, int M) {
    if (p != 0 && p != 1) throw std::invalid_argument("block: p must be 0 or 1");
    if (M < 0) throw std::invalid_argument("block: M must be non-negative");
}

ModelParams params_from_parsed(const nlohmann::json& j) {
    ModelParams p;
    p.omega1 = j.at("omega1").get<double>();
    p.omega2 = j.at("omega2").get<double>();
    p.K1 = j.at("K1").get<double>();
    p.K2 = j.at("K2").get<double>();
    p.g = j.at("g").get<double>();
    return p;
}

}  // namespace

ModelParams params_from_json(const std::string& text) {
    return params_from_parsed(nlohmann::json::parse(text));
}

ModelParams params_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    return params_from_parsed(j);
}

std::string params_to_json(const ModelParams& p) {
    nlohmann::json j{{"omega1", p.omega1},
                     {"omega2", p.omega2},
                     {"K1", p.K1},
                     {"K2", p.K2},
                     {"g", p.g}};
    return j.dump();
}

Mat TridiagonalBlock::to_dense() const {
    const std::size_t n = diag.size();
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = diag[k];
        if (k + 1 < n) {
            m(k, k + 1) = offdiag[k];
            m(k + 1, k) = offdiag[k];
        }
    }
    return m;
}

Mat build_block_direct(const ModelParams& params, int p, int M) {
    check_block_labels(p, M);
    Mat h(M + 1, M + 1);
    for (int k = 0; k <= M; ++k) {
        const double n1 = 2 * k + p;
        const double n2 = M - k;
        h(k, k) = params.omega1 * n1 + params.omega2 * n2 + params.K1 * n1 * n1 +
                  params.K2 * n2 * n2;
        if (k < M) {
            // <2k+2+p, M-k-1| g a1*^2 a2 sqrt(n2) |2k+p, M-k>
            const double coupling = params.g * n2 * std::sqrt((n1 + 1) * (n1 + 2));
            h(k, k + 1) = coupling;
            h(k + 1, k) = coupling;
        }
    }
    return h;
}

TridiagonalBlock build_block_formula(const ModelParams& params, int p, int M) {
    check_block_labels(p, M);
    if (params.g == 0.0)
        throw std::domain_error(
            "build_block_formula: g = 0 divides the closed-form coefficients; "
            "use build_block_direct");
    const double g = params.g;
    TridiagonalBlock block;
    block.p = p;
    block.M = M;
    block.shift = -2 * g * M * (p + 0.5) + params.omega1 * p + params.omega2 * M +
                  params.K1 * p + params.K2 * double(M) * M;
    block.diag.resize(M + 1);
    block.offdiag.resize(M);
    for (int k = 0; k <= M; ++k) {
        const double a_k = double(k) * k / (2 * g) * (4 * params.K1 + params.K2) +
                           double(k) / (2 * g) *
                               (2 * params.omega1 - params.omega2 + 4 * p * params.K1 -
                                2 * M * params.K2) +
                           M * (p + 0.5);
        block.diag[k] = 2 * g * a_k + block.shift;
        if (k < M) {
            const double b_k = (M - k) * std::sqrt((k + 1) * (k + p + 0.5));
            block.offdiag[k] = 2 * g * b_k;
        }
    }
    return block;
}

ResonanceResult resonance_check(const ModelParams& params, double tol) {
    ResonanceResult r;
    r.residuals = {2 * params.omega1 - params.omega2 - params.g,
                   2 * params.K1 + params.g,
                   params.K2 + 2 * params.g};
    r.ok = params.g != 0.0;
    for (double res : r.residuals)
        if (!(std::abs(res) <= tol)) r.ok = false;
    return r;
}

ModelParams resonance_params(double g, double omega1) {
    if (g == 0.0) throw std::invalid_argument("resonance_params: g must be nonzero");
    ModelParams p;
    p.omega1 = omega1;
    p.omega2 = 2 * omega1 - g;
    p.K1 = -g / 2;
    p.K2 = -2 * g;
    p.g = g;
    return p;
}

}  // namespace pdc
