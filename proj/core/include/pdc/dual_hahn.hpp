#pragma once

#include <vector>

#include "pdc/matrix.hpp"

namespace pdc {

// Parameters of the Dual Hahn family: lattice points lambda_l = l(l+gamma+delta+1),
// l = 0..N, with gamma > -1, delta > -1.
struct DualHahnParams {
    double gamma = 0.0;
    double delta = 0.0;
    int N = 0;
};

struct RecurrenceCoeffs {
    double a = 0.0;
    double b = 0.0;
};

std::vector<double> dual_hahn_lattice(const DualHahnParams& params);

// Three-term recurrence coefficients. b_N = 0 by construction.
RecurrenceCoeffs dual_hahn_recurrence_coeffs(const DualHahnParams& params, int k);

// Orthonormality weights rho_N(l; gamma, delta), all positive. Evaluated via
// log-gamma sums with the alternating-sign Pochhammer factors resolved
// analytically, so no signed intermediate is exponentiated.
std::vector<double> dual_hahn_weights(const DualHahnParams& params);

// P_k at lattice point l by forward recurrence, with P_0 fixed to the
// positive constant sqrt(Gamma(delta+N+1) / (N! Gamma(delta+1))).
// This is the canonical sign convention used throughout the project.
// The recurrence is carried in extended precision internally: intermediate
// values span many orders of magnitude before the sqrt(rho) scaling.
double dual_hahn_eval_recurrence(const DualHahnParams& params, int k, int l);

// P_k at lattice point l from the terminating 3F2 closed form. Differs from
// the recurrence convention by a factor (-1)^k; the relation is kept as a
// tested identity.
double dual_hahn_eval_hypergeometric(const DualHahnParams& params, int k, int l);

// W[l][k] = sqrt(rho_l) * P_k(lambda_l) in the recurrence convention.
// Orthogonal: W^T W = W W^T = I.
Mat dual_hahn_transform_matrix(const DualHahnParams& params);

// Symmetric tridiagonal Jacobi matrix built from (a_k, b_k); its spectrum is
// exactly the lattice {lambda_l}.
Mat dual_hahn_jacobi_matrix(const DualHahnParams& params);

}  // namespace pdc
