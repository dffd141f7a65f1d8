#pragma once

// Test-only oracles, independent of the library's computation paths:
// dense averaging matrices and a cyclic-Jacobi symmetric eigensolver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracles {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_hardy(std::size_t n)
{
    Matrix H(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            H[k][j] = 1.0 / static_cast<double>(k + 1);
    return H;
}

inline Matrix dense_gram(std::size_t n)
{
    const Matrix H = dense_hardy(n);
    Matrix G(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                G[i][j] += H[k][i] * H[k][j];
    return G;
}

inline std::vector<double> matvec(const Matrix& A, const std::vector<double>& x)
{
    std::vector<double> y(A.size(), 0.0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] += A[i][j] * x[j];
    return y;
}

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// ascending.
inline std::vector<double> symmetric_eigenvalues(Matrix A)
{
    const std::size_t n = A.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += A[p][q] * A[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = A[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace oracles
