#include "pdc/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pdc {

namespace {

// Implicit-shift QL sweeps on the tridiagonal (d, e), accumulating the
// rotations into z. Classic Bowdler/Martin/Reinsch/Wilkinson scheme
// (EISPACK tql2 lineage). e[i] couples rows i and i+1.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Mat& z) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e.push_back(0.0);  // sentinel e[n-1]
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("tridiagonal_ql: no convergence after 50 sweeps");
                // Wilkinson shift
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

void sort_ascending(std::vector<double>& d, Mat& z) {
    const int n = static_cast<int>(d.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&d](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    Mat zs(n, n);
    for (int j = 0; j < n; ++j) {
        ds[j] = d[order[j]];
        for (int i = 0; i < n; ++i) zs(i, j) = z(i, order[j]);
    }
    d = std::move(ds);
    z = std::move(zs);
}

// Householder reduction of a to tridiagonal form (d, e), overwriting a with
// the accumulated orthogonal transformation.
void householder_tridiagonalize(Mat& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(a.rows());
    d.assign(n, 0.0);
    std::vector<double> esub(n, 0.0);  // esub[i] pairs rows i-1, i

    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                esub[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                esub[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    esub[j] = g / h;
                    f += esub[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    esub[j] = g = esub[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a(j, k) -= f * esub[k] + g * a(i, k);
                }
            }
        } else {
            esub[i] = a(i, l);
        }
        d[i] = h;
    }

    d[0] = 0.0;
    esub[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
    }

    e.assign(n > 1 ? n - 1 : 0, 0.0);
    for (int i = 1; i < n; ++i) e[i - 1] = esub[i];
}

}  // namespace

SymmetricEigenResult eigen_symmetric_tridiagonal(std::vector<double> diag,
                                                 std::vector<double> offdiag) {
    const int n = static_cast<int>(diag.size());
    if (static_cast<int>(offdiag.size()) != (n > 0 ? n - 1 : 0))
        throw std::invalid_argument("eigen_symmetric_tridiagonal: offdiag size mismatch");
    Mat z = Mat::identity(n);
    tridiagonal_ql(diag, offdiag, z);
    sort_ascending(diag, z);
    return {std::move(diag), std::move(z)};
}

SymmetricEigenResult eigen_symmetric(Mat a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("eigen_symmetric: matrix must be square");
    std::vector<double> d, e;
    householder_tridiagonalize(a, d, e);
    tridiagonal_ql(d, e, a);
    sort_ascending(d, a);
    return {std::move(d), std::move(a)};
}

void fix_column_signs(Mat& vectors, double tol) {
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        for (std::size_t i = 0; i < vectors.rows(); ++i) {
            const double v = vectors(i, j);
            if (std::abs(v) > tol) {
                if (v < 0.0)
                    for (std::size_t k = 0; k < vectors.rows(); ++k) vectors(k, j) = -vectors(k, j);
                break;
            }
        }
    }
}

}  // namespace pdc
