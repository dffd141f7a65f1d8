#include "hardy/dual_hahn.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

void HahnParams::validate() const
{
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("hahn params: a, b, c must be > 0");
}

double cdh_eval(int n, double t, const HahnParams& p)
{
    if (n < 0)
        throw InvalidDegree("cdh_eval: degree must be >= 0");
    p.validate();

    double pre = 1.0;  // (a+b)_n (a+c)_n
    for (int m = 0; m < n; ++m)
        pre *= (p.a + p.b + m) * (p.a + p.c + m);

    double sum = 1.0;
    double term = 1.0;
    for (int nu = 1; nu <= n; ++nu) {
        const int m = nu - 1;
        const double am = p.a + m;
        term *= -static_cast<double>(n - m) * (am * am + t) /
                (static_cast<double>(nu) * (p.a + p.b + m) * (p.a + p.c + m));
        sum += term;
    }
    return pre * sum;
}

JacobiMatrixSpec jacobi_matrix(std::size_t n, const HahnParams& p)
{
    if (n < 1)
        throw InvalidDegree("jacobi_matrix: degree must be >= 1");
    p.validate();

    // Monic three-term recurrence in t:
    //   t p_k = p_{k+1} + (A_k + C_k - a^2) p_k + A_{k-1} C_k p_{k-1},
    //   A_k = (k+a+b)(k+a+c),  C_k = k(k+b+c-1).
    num::TridiagonalSymmetric m;
    m.diag.resize(n);
    m.offdiag.resize(n - 1);
    auto A = [&p](double k) { return (k + p.a + p.b) * (k + p.a + p.c); };
    auto C = [&p](double k) { return k * (k + p.b + p.c - 1.0); };
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        m.diag[k] = A(kk) + C(kk) - p.a * p.a;
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        m.offdiag[k - 1] = std::sqrt(A(kk - 1.0) * C(kk));
    }
    return {n, p, std::move(m)};
}

SmallestZeroReport smallest_zero(std::size_t n)
{
    const JacobiMatrixSpec spec = jacobi_matrix(n, HahnParams{});
    const double t1 = num::tridiag_smallest_eigenvalue(spec.tridiag, 1e-13);
    return {n, t1, std::sqrt(t1), 4.0 / (1.0 + 4.0 * t1)};
}

DiscreteNormReport dn_hahn(std::size_t n)
{
    const JacobiMatrixSpec spec = jacobi_matrix(n, HahnParams{});
    num::BisectionStats stats;
    const double t1 = num::tridiag_smallest_eigenvalue(spec.tridiag, 1e-13, &stats);
    return {n, 4.0 / (1.0 + 4.0 * t1), NormMethod::hahn, stats.iterations,
            stats.final_width};
}

} // namespace hardy
