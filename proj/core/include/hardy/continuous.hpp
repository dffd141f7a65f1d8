#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hardy/alpha.hpp"

namespace hardy {

// Finite interval (a, b) with 0 < a < b. Rejects b/a < 1 + 1e-12, where the
// characteristic bracket collapses numerically.
struct IntervalSpec {
    double a = 0.0;
    double b = 0.0;

    void validate() const;
    double log_ratio() const;  // ln(b/a)
};

// Sharp constant d(a,b) of the Hardy inequality
//   int_a^b ((1/x) int_a^x f)^2 dx <= d(a,b) int_a^b f^2 dx,
// d = 4/(1 + 4*alpha^2) with alpha the characteristic root for L = ln(b/a).
// Depends on (a,b) only through b/a.
struct SharpConstantReport {
    IntervalSpec interval;
    double L = 0.0;
    AlphaRoot root;
    double d = 0.0;
};

// Equality-attaining function in normalized coordinates u = x/a:
//   h(u) = u^(-1/2) * (2*alpha*cos(alpha*ln u) + sin(alpha*ln u)),
// strictly positive and decreasing on [1, b/a), zero at u = b/a.
struct ExtremalFunctionSpec {
    IntervalSpec interval;
    AlphaRoot root;
};

struct EqualityCheckReport {
    double lhs = 0.0;         // quadrature of ((1/v) int_1^v h)^2 over [1, b/a]
    double rhs = 0.0;         // d times quadrature of h^2
    double ratio = 0.0;       // lhs / rhs
    double quad_error = 0.0;  // propagated estimate for |ratio - 1|
};

SharpConstantReport sharp_constant(IntervalSpec iv);

ExtremalFunctionSpec extremal_function(IntervalSpec iv);

// Value of the extremal function at x in [a, b] (throws OutOfDomain outside).
double extremal_eval(const ExtremalFunctionSpec& spec, double x);

// Checks that the extremal function attains equality: both sides computed by
// adaptive quadrature (the inner integral in closed form), ratio within
// quadrature error of 1.
EqualityCheckReport verify_equality(IntervalSpec iv, double quad_tol);

// Certificate functional for an arbitrary positive weight g^2 on the
// normalized interval (1, b/a):
//   M(g,t) = g^(-2)(t) * int_t^{b/a} x^(-2) (int_1^x g^2) dx.
// max_t M(g,t) is an upper bound for d(a,b); with the extremal weight it is
// constant and equals d.

// M sampled at grid_size log-uniform points strictly inside (1, b/a).
std::vector<std::pair<double, double>> weight_certificate_profile(
    IntervalSpec iv, const std::function<double(double)>& g_squared, int grid_size);

// Grid maximum, refined by golden-section search around the argmax.
double weight_certificate(IntervalSpec iv,
                          const std::function<double(double)>& g_squared,
                          int grid_size);

// (min, max) over the sweep of (4 - d(1, e^L)) * L^2; both finite and
// positive, and approaching 16*pi^2 as L grows.
std::pair<double, double> scaled_deficit_range(std::span<const double> L_values);

} // namespace hardy
