#include "pdc/dual_hahn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pdc {

namespace {

void check_params(const DualHahnParams& p) {
    if (!(p.gamma > -1.0) || !(p.delta > -1.0))
        throw std::invalid_argument("dual_hahn: require gamma > -1 and delta > -1");
    if (p.N < 0) throw std::invalid_argument("dual_hahn: N must be non-negative");
}

void check_indices(const DualHahnParams& p, int k, int l) {
    if (k < 0 || k > p.N) throw std::out_of_range("dual_hahn: k out of [0, N]");
    if (l < 0 || l > p.N) throw std::out_of_range("dual_hahn: l out of [0, N]");
}

// log Gamma(a + m) - log Gamma(a) for a > 0, i.e. log of the Pochhammer
// symbol (a)_m with all factors positive.
double log_pochhammer(double a, int m) { return std::lgamma(a + m) - std::lgamma(a); }

// Extended precision for the forward recurrence. In double the intermediate
// P_k span ~1e14 at N = 50 and the accumulated error survives the final
// sqrt(rho) scaling (orthonormality residual ~1e-4); quad headroom brings the
// rounded result back to ~1e-16. Plain __float128 arithmetic lives in libgcc,
// and the square root is refined from the double seed so libquadmath is not
// needed.
using quad = __float128;

quad quad_sqrt(quad y) {
    quad x = std::sqrt(double(y));
    x = quad(0.5) * (x + y / x);  // two Newton steps: 1e-16 -> 1e-32 -> eps
    x = quad(0.5) * (x + y / x);
    return x;
}

double p0_value(const DualHahnParams& p) {
    return std::exp(0.5 * (std::lgamma(p.delta + p.N + 1) - std::lgamma(double(p.N) + 1) -
                           std::lgamma(p.delta + 1)));
}

// P_0..P_kmax at lattice point l by forward recurrence, carried in quad.
std::vector<quad> recurrence_column(const DualHahnParams& p, int l, int kmax) {
    const quad g = p.gamma;
    const quad d = p.delta;
    const quad n = p.N;
    const quad lambda = quad(l) * (l + g + d + 1);
    std::vector<quad> col(kmax + 1);
    col[0] = p0_value(p);
    quad b_prev = 0.0;
    quad p_prev = 0.0;
    for (int k = 0; k < kmax; ++k) {
        const quad a = (k + g + 1) * (n - k) + k * (n + d + 1 - k);
        const quad b_sq = (k + 1) * (k + g + 1) * (n - k) * (n + d - k);
        if (!(b_sq > 0.0))
            throw std::runtime_error("dual_hahn: degenerate recurrence (b_k = 0 at k = " +
                                     std::to_string(k) + " < N)");
        const quad b = quad_sqrt(b_sq);
        const quad next = ((lambda - a) * col[k] - b_prev * p_prev) / b;
        p_prev = col[k];
        col[k + 1] = next;
        b_prev = b;
    }
    return col;
}

}  // namespace

std::vector<double> dual_hahn_lattice(const DualHahnParams& params) {
    check_params(params);
    std::vector<double> values(params.N + 1);
    for (int l = 0; l <= params.N; ++l)
        values[l] = double(l) * (l + params.gamma + params.delta + 1);
    return values;
}

RecurrenceCoeffs dual_hahn_recurrence_coeffs(const DualHahnParams& params, int k) {
    check_params(params);
    if (k < 0 || k > params.N) throw std::out_of_range("dual_hahn: k out of [0, N]");
    const double g = params.gamma;
    const double d = params.delta;
    const double N = params.N;
    RecurrenceCoeffs c;
    c.a = (k + g + 1) * (N - k) + k * (N + d + 1 - k);
    c.b = std::sqrt((k + 1) * (k + g + 1) * (N - k) * (N + d - k));
    return c;
}

std::vector<double> dual_hahn_weights(const DualHahnParams& params) {
    check_params(params);
    if (params.N > 10000)
        throw std::overflow_error("dual_hahn_weights: N beyond supported numeric range");
    const double g = params.gamma;
    const double d = params.delta;
    const int N = params.N;
    const double log_nfact = std::lgamma(double(N) + 1);
    std::vector<double> weights(N + 1);
    for (int l = 0; l <= N; ++l) {
        // (-N)_l / (-1)^l = N! / (N-l)!, so every remaining factor is positive.
        const double log_rho =
            std::log(2 * l + g + d + 1) + log_pochhammer(g + 1, l) +
            (log_nfact - std::lgamma(double(N - l) + 1)) + log_nfact -
            log_pochhammer(l + g + d + 1, N + 1) - log_pochhammer(d + 1, l) -
            std::lgamma(double(l) + 1);
        if (log_rho > 700.0 || log_rho < -745.0)
            throw std::overflow_error("dual_hahn_weights: weight out of double range");
        weights[l] = std::exp(log_rho);
    }
    return weights;
}

double dual_hahn_eval_recurrence(const DualHahnParams& params, int k, int l) {
    check_params(params);
    check_indices(params, k, l);
    return double(recurrence_column(params, l, k)[k]);
}

double dual_hahn_eval_hypergeometric(const DualHahnParams& params, int k, int l) {
    check_params(params);
    check_indices(params, k, l);
    const double g = params.gamma;
    const double d = params.delta;
    const int N = params.N;
    // terminating 3F2(-k, -l, l+g+d+1; g+1, -N | 1). The sum alternates with
    // terms far larger than the result, so it is accumulated in quad.
    quad term = 1.0;
    quad sum = 1.0;
    const int jmax = std::min(k, l);
    for (int j = 0; j < jmax; ++j) {
        term *= (quad(-k + j) * (-l + j) * (quad(l) + g + d + 1 + j)) /
                ((quad(g) + 1 + j) * (-N + j) * (j + 1));
        sum += term;
    }
    const double log_prefactor =
        0.5 * (std::lgamma(g + k + 1) + std::lgamma(d + N - k + 1) -
               std::lgamma(double(k) + 1) - std::lgamma(double(N - k) + 1) -
               std::lgamma(g + 1) - std::lgamma(d + 1));
    return std::exp(log_prefactor) * double(sum);
}

Mat dual_hahn_transform_matrix(const DualHahnParams& params) {
    check_params(params);
    const int N = params.N;
    const auto weights = dual_hahn_weights(params);
    Mat w(N + 1, N + 1);
    for (int l = 0; l <= N; ++l) {
        const auto col = recurrence_column(params, l, N);
        const quad sqrt_rho = std::sqrt(weights[l]);
        for (int k = 0; k <= N; ++k) w(l, k) = double(sqrt_rho * col[k]);
    }
    return w;
}

Mat dual_hahn_jacobi_matrix(const DualHahnParams& params) {
    check_params(params);
    const int N = params.N;
    Mat j(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        const auto c = dual_hahn_recurrence_coeffs(params, k);
        j(k, k) = c.a;
        if (k < N) {
            j(k, k + 1) = c.b;
            j(k + 1, k) = c.b;
        }
    }
    return j;
}

}  // namespace pdc
