#include "hardy/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/num/power_iteration.hpp"

namespace hardy {

namespace {

// Plain accumulation in index order below this size, Kahan-compensated above.
constexpr std::size_t compensation_threshold = 100000;

class Accumulator {
public:
    explicit Accumulator(bool compensated) : compensated_(compensated) {}

    void add(double x)
    {
        if (compensated_) {
            const double y = x - carry_;
            const double t = sum_ + y;
            carry_ = (t - sum_) - y;
            sum_ = t;
        } else {
            sum_ += x;
        }
    }

    double value() const { return sum_; }

private:
    bool compensated_;
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void prefix_means(std::span<const double> a, std::span<double> y)
{
    Accumulator s(a.size() > compensation_threshold);
    for (std::size_t k = 0; k < a.size(); ++k) {
        s.add(a[k]);
        y[k] = s.value() / static_cast<double>(k + 1);
    }
}

} // namespace

void hardy_apply(const HardyOperator& op, std::span<const double> a,
                 std::span<double> y)
{
    if (op.n == 0)
        throw DomainError("hardy_apply: n must be >= 1");
    if (a.size() != op.n || y.size() != op.n)
        throw DimensionMismatch("hardy_apply: vector length must equal n");
    prefix_means(a, y);
}

std::vector<double> hardy_apply(const HardyOperator& op, std::span<const double> a)
{
    std::vector<double> y(a.size());
    hardy_apply(op, a, y);
    return y;
}

void hardy_gram_apply(const HardyOperator& op, std::span<const double> a,
                      std::span<double> out)
{
    if (op.n == 0)
        throw DomainError("hardy_gram_apply: n must be >= 1");
    if (a.size() != op.n || out.size() != op.n)
        throw DimensionMismatch("hardy_gram_apply: vector length must equal n");
    std::vector<double> y(op.n);
    prefix_means(a, y);
    Accumulator s(op.n > compensation_threshold);
    for (std::size_t k = op.n; k-- > 0;) {
        s.add(y[k] / static_cast<double>(k + 1));
        out[k] = s.value();
    }
}

std::vector<double> hardy_gram_apply(const HardyOperator& op,
                                     std::span<const double> a)
{
    std::vector<double> out(a.size());
    hardy_gram_apply(op, a, out);
    return out;
}

DiscreteNormReport dn_eigen(std::size_t n, double tol, std::uint64_t seed)
{
    if (n == 0)
        throw DomainError("dn_eigen: n must be >= 1");
    const HardyOperator op{n};
    auto apply = [&op](std::span<const double> in, std::span<double> out) {
        hardy_gram_apply(op, in, out);
    };
    const num::PowerIterationResult r =
        num::power_iteration_top_eigenvalue(apply, n, tol, seed);
    return {n, r.value, NormMethod::eigen, r.iterations, r.residual};
}

AlmostExtremalSequence almost_extremal(std::size_t n)
{
    if (n == 0)
        throw DomainError("almost_extremal: n must be >= 1");
    AlphaRoot root = alpha_solve(std::log(static_cast<double>(n) + 1.0));
    std::vector<double> a(n);
    double prev = 0.0;  // partial sum through k = 0
    for (std::size_t k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k) + 1.0;
        const double cur = 2.0 * std::sqrt(kk) * std::sin(root.alpha * std::log(kk));
        a[k - 1] = cur - prev;
        prev = cur;
    }
    const double rayleigh = rayleigh_quotient(a);
    return {n, root, std::move(a), rayleigh};
}

double rayleigh_quotient(std::span<const double> a)
{
    if (a.empty())
        throw ZeroVector("rayleigh_quotient: empty vector");
    std::vector<double> y(a.size());
    prefix_means(a, y);
    const bool comp = a.size() > compensation_threshold;
    Accumulator num(comp), den(comp);
    for (std::size_t k = 0; k < a.size(); ++k) {
        num.add(y[k] * y[k]);
        den.add(a[k] * a[k]);
    }
    if (den.value() == 0.0)
        throw ZeroVector("rayleigh_quotient: zero vector");
    return num.value() / den.value();
}

double certificate_lower(std::span<const double> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        throw DomainError("certificate_lower: empty vector");
    for (double v : a)
        if (!(v > 0.0))
            throw NonPositiveEntry("certificate_lower: entries must be > 0");

    const bool comp = n > compensation_threshold;
    std::vector<double> prefix(n);
    Accumulator p(comp);
    for (std::size_t k = 0; k < n; ++k) {
        p.add(a[k]);
        prefix[k] = p.value();
    }
    double best = std::numeric_limits<double>::infinity();
    Accumulator tail(comp);
    for (std::size_t i = n; i-- > 0;) {
        const double k = static_cast<double>(i + 1);
        tail.add(prefix[i] / (k * k));
        best = std::min(best, tail.value() / a[i]);
    }
    return best;
}

std::pair<double, double> dn_bounds(std::size_t n)
{
    if (n < 3)
        throw TooSmall("dn_bounds: requires n >= 3");
    constexpr double pi = std::numbers::pi;
    const double nn = static_cast<double>(n);
    const double l1 = std::log(nn + 1.0);
    const double l0 = std::log(nn);
    return {4.0 - 16.0 * pi * pi / (l1 * l1), 4.0 - 32.0 / ((l0 + 4.0) * (l0 + 4.0))};
}

} // namespace hardy
