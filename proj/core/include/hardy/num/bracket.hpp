#pragma once

#include <functional>

namespace hardy::num {

// Scalar root-finding problem on a sign-changing bracket [lo, hi].
struct BracketedProblem {
    double lo = 0.0;
    double hi = 0.0;
    std::function<double(double)> f;
    double tol_x = 1e-14;  // bracket-width stop; 0 means bisect to the ulp floor
    double tol_f = 1e-14;  // residual stop, checked first
    int max_iter = 200;
};

// Bisection root of f on (lo, hi). Returns a point strictly inside the
// bracket with |f| <= tol_f, or the best point seen once the bracket width
// reaches tol_x (or the spacing of adjacent doubles). Deterministic.
//
// Throws NoSignChange unless f(lo) and f(hi) have strictly opposite signs,
// NoConvergence if max_iter is exhausted with neither tolerance met.
double solve_bracketed(const BracketedProblem& p);

} // namespace hardy::num
