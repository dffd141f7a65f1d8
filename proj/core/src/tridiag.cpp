#include "hardy/num/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy::num {

void TridiagonalSymmetric::validate() const
{
    if (diag.empty())
        throw DomainError("tridiagonal: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw DimensionMismatch("tridiagonal: offdiag must have size diag-1");
    for (double b : offdiag)
        if (!(b > 0.0) || !std::isfinite(b))
            throw DomainError("tridiagonal: off-diagonal entries must be finite and > 0");
    for (double d : diag)
        if (!std::isfinite(d))
            throw DomainError("tridiagonal: diagonal entries must be finite");
}

int sturm_count_below(const TridiagonalSymmetric& m, double shift)
{
    // Extended precision in the pivots: the count's backward error scales
    // with eps * ||A||, and the matrices here have entries growing like n^2
    // while the wanted eigenvalue stays near zero.
    const std::size_t n = m.diag.size();
    int count = 0;
    long double d = static_cast<long double>(m.diag[0]) - shift;
    if (d == 0.0L)
        d = -std::numeric_limits<long double>::min();
    if (d < 0.0L)
        ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const long double b = m.offdiag[i - 1];
        d = (static_cast<long double>(m.diag[i]) - shift) - (b * b) / d;
        if (d == 0.0L)
            d = -std::numeric_limits<long double>::min();
        if (d < 0.0L)
            ++count;
    }
    return count;
}

namespace {

// Gershgorin enclosure of the whole spectrum.
std::pair<double, double> spectrum_bounds(const TridiagonalSymmetric& m)
{
    const std::size_t n = m.diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += m.offdiag[i - 1];
        if (i + 1 < n) r += m.offdiag[i];
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    return {lo - pad, hi + pad};
}

} // namespace

double eigenvalue_at(const TridiagonalSymmetric& m, std::size_t k, double tol,
                     BisectionStats* stats)
{
    m.validate();
    if (k >= m.size())
        throw DomainError("eigenvalue_at: index out of range");
    if (!(tol > 0.0))
        throw DomainError("eigenvalue_at: tol must be > 0");

    auto [lo, hi] = spectrum_bounds(m);
    const int max_iter = 300;
    int it = 0;
    const double eps = std::numeric_limits<double>::epsilon();
    while (hi - lo > tol + 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) {
        if (++it > max_iter)
            throw NoConvergence("eigenvalue_at: bisection budget exhausted");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;  // interval hit the resolution floor
        if (sturm_count_below(m, mid) > static_cast<int>(k))
            hi = mid;
        else
            lo = mid;
    }
    if (stats) {
        stats->iterations = it;
        stats->final_width = hi - lo;
    }
    return 0.5 * (lo + hi);
}

double tridiag_smallest_eigenvalue(const TridiagonalSymmetric& m, double tol,
                                   BisectionStats* stats)
{
    return eigenvalue_at(m, 0, tol, stats);
}

} // namespace hardy::num
