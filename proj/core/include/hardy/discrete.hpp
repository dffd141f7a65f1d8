#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hardy/alpha.hpp"

namespace hardy {

// Finite section of the averaging operator (H a)_k = (1/k) sum_{j<=k} a_j.
struct HardyOperator {
    std::size_t n = 0;
};

enum class NormMethod { eigen, hahn };

// d_n, the smallest constant with sum ((H a)_k)^2 <= d_n sum a_k^2.
// d_1 = 1 and d_n increases toward 4.
struct DiscreteNormReport {
    std::size_t n = 0;
    double d_n = 0.0;
    NormMethod method = NormMethod::eigen;
    int iterations = 0;
    double residual = 0.0;  // eigen: ||G v - d_n v||; hahn: final bisection width
};

// Sequence a_k = 2*sqrt(k+1)*sin(alpha ln(k+1)) - 2*sqrt(k)*sin(alpha ln k)
// with alpha solved for L = ln(n+1); its partial sums telescope to
// 2*sqrt(k+1)*sin(alpha ln(k+1)) and its Rayleigh quotient is at least
// 4/(1 + 4*alpha^2).
struct AlmostExtremalSequence {
    std::size_t n = 0;
    AlphaRoot root;
    std::vector<double> values;
    double rayleigh = 0.0;
};

// y_k = (1/k) * (a_1 + ... + a_k), one prefix pass, O(n).
void hardy_apply(const HardyOperator& op, std::span<const double> a,
                 std::span<double> y);
std::vector<double> hardy_apply(const HardyOperator& op, std::span<const double> a);

// Gram operator H^T H a in O(n): prefix means, then suffix sums of y_k/k.
void hardy_gram_apply(const HardyOperator& op, std::span<const double> a,
                      std::span<double> out);
std::vector<double> hardy_gram_apply(const HardyOperator& op,
                                     std::span<const double> a);

// d_n as the top eigenvalue of the Gram operator (matrix-free power
// iteration, seeded start vector).
DiscreteNormReport dn_eigen(std::size_t n, double tol = 1e-12,
                            std::uint64_t seed = 0x48415244u);

AlmostExtremalSequence almost_extremal(std::size_t n);

// sum ((H a)_k)^2 / sum a_k^2; at most d_n for any nonzero a.
double rayleigh_quotient(std::span<const double> a);

// min_i M_i with M_i = (1/a_i) sum_{k>=i} (1/k^2) sum_{j<=k} a_j, computed
// in O(n); a lower bound for d_n when all a_i > 0.
double certificate_lower(std::span<const double> a);

// Two-sided bounds (4 - 16*pi^2/ln^2(n+1), 4 - 32/(ln n + 4)^2), valid for
// n >= 3 (throws TooSmall below).
std::pair<double, double> dn_bounds(std::size_t n);

} // namespace hardy
