#include "hardy/alpha.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/num/bracket.hpp"

namespace hardy {

double characteristic(double alpha_value, double L)
{
    const double t = alpha_value * L;
    return 2.0 * alpha_value * std::cos(t) + std::sin(t);
}

AlphaRoot alpha_solve(double L)
{
    if (!(L > 0.0) || !std::isfinite(L))
        throw InvalidLength("alpha_solve: L must be finite and > 0");

    constexpr double pi = std::numbers::pi;
    num::BracketedProblem p;
    p.lo = pi / (2.0 * L);
    p.hi = pi / L;
    p.f = [L](double a) { return characteristic(a, L); };
    // Residual-first: tol_x = 0 lets bisection run to the ulp floor when
    // needed, since |F'| grows like L and a fixed width stop would leave the
    // residual above target at large L.
    p.tol_x = 0.0;
    p.tol_f = 1e-13;
    p.max_iter = 200;

    const double root = num::solve_bracketed(p);
    return {L, root, std::abs(characteristic(root, L)), p.lo, p.hi};
}

double alpha_to_constant(const AlphaRoot& r)
{
    return 4.0 / (1.0 + 4.0 * r.alpha * r.alpha);
}

} // namespace hardy
