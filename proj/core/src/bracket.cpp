#include "hardy/num/bracket.hpp"

#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy::num {

double solve_bracketed(const BracketedProblem& p)
{
    if (!p.f)
        throw DomainError("solve_bracketed: no function");
    if (!(p.lo < p.hi))
        throw DomainError("solve_bracketed: requires lo < hi");

    double lo = p.lo;
    double hi = p.hi;
    const double flo = p.f(lo);
    const double fhi = p.f(hi);
    if (std::isnan(flo) || std::isnan(fhi) || !(flo * fhi < 0.0))
        throw NoSignChange("solve_bracketed: f(lo) and f(hi) must have opposite signs");

    const bool increasing = flo < 0.0;
    double best_x = 0.5 * (lo + hi);
    double best_f = std::numeric_limits<double>::infinity();

    for (int it = 0; it < p.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            return best_x;  // adjacent doubles, nothing left to split
        const double fm = p.f(mid);
        if (std::abs(fm) < std::abs(best_f)) {
            best_f = fm;
            best_x = mid;
        }
        if (std::abs(fm) <= p.tol_f)
            return mid;
        if ((fm < 0.0) == increasing)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= p.tol_x)
            return best_x;
    }
    if (hi - lo <= p.tol_x || std::abs(best_f) <= p.tol_f)
        return best_x;
    throw NoConvergence("solve_bracketed: iteration budget exhausted");
}

} // namespace hardy::num
