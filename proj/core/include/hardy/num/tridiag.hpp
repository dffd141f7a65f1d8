#pragma once

#include <cstddef>
#include <vector>

namespace hardy::num {

// Symmetric tridiagonal matrix with strictly positive off-diagonal entries
// (unreduced, hence all eigenvalues simple).
struct TridiagonalSymmetric {
    std::vector<double> diag;
    std::vector<double> offdiag;  // size diag.size() - 1

    std::size_t size() const { return diag.size(); }
    void validate() const;
};

struct BisectionStats {
    int iterations = 0;
    double final_width = 0.0;
};

// Number of eigenvalues strictly below `shift`, from the sign count of the
// shifted LDL^T pivot recurrence. Zero pivots are nudged to -DBL_MIN; the
// following quotient saturates in IEEE arithmetic and the count stays exact.
int sturm_count_below(const TridiagonalSymmetric& m, double shift);

// k-th smallest eigenvalue (0-based), located by Sturm-count bisection
// inside the Gershgorin interval, to within tol.
double eigenvalue_at(const TridiagonalSymmetric& m, std::size_t k, double tol,
                     BisectionStats* stats = nullptr);

double tridiag_smallest_eigenvalue(const TridiagonalSymmetric& m, double tol,
                                   BisectionStats* stats = nullptr);

} // namespace hardy::num
