#include "hardy/num/power_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hardy/errors.hpp"

namespace hardy::num {

namespace {

double dot(std::span<const double> x, std::span<const double> y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace

PowerIterationResult power_iteration_top_eigenvalue(const LinearOperator& apply,
                                                    std::size_t dim, double tol,
                                                    std::uint64_t seed, int max_iter)
{
    if (dim == 0)
        throw DomainError("power_iteration: dim must be >= 1");
    if (!(tol > 0.0))
        throw DomainError("power_iteration: tol must be > 0");

    std::vector<double> v(dim), w(dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (double& x : v) x = unit(rng);
    double nv = std::sqrt(dot(v, v));
    if (nv == 0.0) {
        std::fill(v.begin(), v.end(), 1.0);
        nv = std::sqrt(static_cast<double>(dim));
    }
    for (double& x : v) x /= nv;

    double lambda_prev = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 1; it <= max_iter; ++it) {
        apply(v, w);
        const double lambda = dot(v, w);
        double res2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double r = w[i] - lambda * v[i];
            res2 += r * r;
        }
        const double residual = std::sqrt(res2);
        const double scale = std::max(1.0, std::abs(lambda));
        stagnant = (std::abs(lambda - lambda_prev) <= tol * scale) ? stagnant + 1 : 0;
        if (stagnant >= 2 && residual <= 10.0 * tol * scale)
            return {lambda, v, it, residual};
        lambda_prev = lambda;

        const double nw = std::sqrt(dot(w, w));
        if (nw == 0.0)
            return {0.0, v, it, 0.0};  // v is annihilated: 0 is the top of this invariant subspace
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / nw;
    }
    throw NoConvergence("power_iteration: no convergence within iteration budget");
}

} // namespace hardy::num
