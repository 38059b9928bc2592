#pragma once

#include <vector>

#include "pdc/matrix.hpp"

namespace pdc {

// In-repo symmetric eigensolver: Householder reduction to tridiagonal form
// followed by implicit-shift QL. Serves as the numeric oracle for the
// analytic Dual Hahn path, so it deliberately depends on no external
// numerical library.

struct SymmetricEigenResult {
    std::vector<double> eigenvalues;  // ascending
    Mat eigenvectors;                 // column j pairs with eigenvalues[j]
};

// diag has n entries, offdiag n-1. Throws std::runtime_error on
// non-convergence (iteration cap exceeded).
SymmetricEigenResult eigen_symmetric_tridiagonal(std::vector<double> diag,
                                                 std::vector<double> offdiag);

SymmetricEigenResult eigen_symmetric(Mat a);

// Gauge fix: flip each column so its first component of magnitude above
// tol is positive.
void fix_column_signs(Mat& vectors, double tol = 1e-12);

}  // namespace pdc
