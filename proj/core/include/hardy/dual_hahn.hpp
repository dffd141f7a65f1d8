#pragma once

#include <cstddef>

#include "hardy/discrete.hpp"
#include "hardy/num/tridiag.hpp"

namespace hardy {

// Parameters of the continuous dual Hahn family S_n(x^2; a, b, c); all
// positive, so the zeros in t = x^2 are real, simple and positive.
struct HahnParams {
    double a = 0.5;
    double b = 0.5;
    double c = 0.5;

    void validate() const;
};

// Jacobi matrix in the variable t = x^2 whose eigenvalues are the zeros of
// S_n(t; params). For (1/2, 1/2, 1/2) the entries are
//   diag_k = (k+1)^2 + k^2 - 1/4,   offdiag_k = k^2.
struct JacobiMatrixSpec {
    std::size_t n = 0;
    HahnParams params;
    num::TridiagonalSymmetric tridiag;
};

struct SmallestZeroReport {
    std::size_t n = 0;
    double t1 = 0.0;           // smallest eigenvalue of the Jacobi matrix
    double x1 = 0.0;           // sqrt(t1), smallest positive zero in x
    double d_from_zero = 0.0;  // 4 / (1 + 4 * x1^2) = d_n
};

// S_n(t; a, b, c) by direct evaluation of the terminating hypergeometric
// sum, with the conjugate Pochhammer pair reduced to the real product
// prod_m ((a+m)^2 + t). Degree n in t, leading coefficient (-1)^n.
// Alternating terms cancel as n grows; intended as an oracle for n <= 64 —
// production zeros go through the Jacobi matrix.
double cdh_eval(int n, double t, const HahnParams& p);

JacobiMatrixSpec jacobi_matrix(std::size_t n, const HahnParams& p);

// Smallest zero of S_n(x^2; 1/2, 1/2, 1/2) via Sturm bisection on the
// Jacobi matrix, and the discrete Hardy constant it determines.
SmallestZeroReport smallest_zero(std::size_t n);

DiscreteNormReport dn_hahn(std::size_t n);

} // namespace hardy
