#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hardy::num {

// Matrix-free symmetric linear operator: writes A*in into out.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct PowerIterationResult {
    double value = 0.0;          // Rayleigh quotient at the returned vector
    std::vector<double> vector;  // unit-norm final iterate
    int iterations = 0;
    double residual = 0.0;       // ||A v - value * v||_2
};

// Largest eigenvalue of a symmetric positive-semidefinite operator by power
// iteration from a seeded pseudo-random start vector. Converged when the
// relative Rayleigh-quotient change stays below tol on two consecutive
// iterations and the eigenpair residual is below 10*tol*max(1,|value|).
// Reproducible for a fixed seed.
PowerIterationResult power_iteration_top_eigenvalue(const LinearOperator& apply,
                                                    std::size_t dim, double tol,
                                                    std::uint64_t seed,
                                                    int max_iter = 100000);

} // namespace hardy::num
