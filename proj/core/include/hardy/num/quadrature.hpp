#pragma once

#include <functional>

namespace hardy::num {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // sum of per-panel |K15 - G7| differences
    long evaluations = 0;
};

// Globally adaptive quadrature of f over [a, b] with an embedded
// Gauss(7)/Kronrod(15) pair: the panel with the largest error difference is
// bisected until the total estimate drops below max(tol, tol*|value|).
// Deterministic for fixed inputs.
//
// Throws ToleranceNotMet when the panel budget is exhausted (or every panel
// has reached the width floor) with the estimate still above the request.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    int max_intervals = 200000);

} // namespace hardy::num
