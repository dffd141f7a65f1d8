#pragma once

namespace hardy {

// Root of the characteristic equation that fixes the sharp Hardy constant
// for logarithmic interval length L: the unique zero of
//     F(alpha) = 2*alpha*cos(alpha*L) + sin(alpha*L)
// on (pi/(2L), pi/L). F is the smooth equivalent of tan(alpha*L) = -2*alpha
// on that interval (cos does not vanish there), F(pi/2L) = 1 and
// F(pi/L) = -2*pi/L, so bisection applies unconditionally.
struct AlphaRoot {
    double L = 0.0;
    double alpha = 0.0;
    double residual = 0.0;    // |F(alpha)|, re-evaluated at the root
    double bracket_lo = 0.0;  // pi/(2L)
    double bracket_hi = 0.0;  // pi/L
};

// F(alpha) above.
double characteristic(double alpha_value, double L);

// Solves the characteristic equation. Throws InvalidLength if L <= 0,
// NoConvergence if the residual target cannot be reached.
AlphaRoot alpha_solve(double L);

// Sharp constant 4 / (1 + 4*alpha^2); always in (0, 4).
double alpha_to_constant(const AlphaRoot& r);

} // namespace hardy
