#include "hardy/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/num/quadrature.hpp"

namespace hardy {

void IntervalSpec::validate() const
{
    if (!(a > 0.0) || !(b > a) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidInterval("interval: requires 0 < a < b < inf");
    if (b / a < 1.0 + 1e-12)
        throw InvalidInterval("interval: b/a too close to 1");
}

double IntervalSpec::log_ratio() const
{
    return std::log(b / a);
}

SharpConstantReport sharp_constant(IntervalSpec iv)
{
    iv.validate();
    const double L = iv.log_ratio();
    AlphaRoot root = alpha_solve(L);
    const double d = alpha_to_constant(root);
    return {iv, L, root, d};
}

ExtremalFunctionSpec extremal_function(IntervalSpec iv)
{
    iv.validate();
    return {iv, alpha_solve(iv.log_ratio())};
}

namespace {

double h_eval(double u, double alpha)
{
    const double t = alpha * std::log(u);
    return (2.0 * alpha * std::cos(t) + std::sin(t)) / std::sqrt(u);
}

} // namespace

double extremal_eval(const ExtremalFunctionSpec& spec, double x)
{
    if (!(x >= spec.interval.a) || !(x <= spec.interval.b))
        throw OutOfDomain("extremal_eval: x outside [a, b]");
    return h_eval(x / spec.interval.a, spec.root.alpha);
}

EqualityCheckReport verify_equality(IntervalSpec iv, double quad_tol)
{
    if (!(quad_tol > 0.0))
        throw DomainError("verify_equality: quad_tol must be > 0");
    const SharpConstantReport rep = sharp_constant(iv);
    const double B = iv.b / iv.a;
    const double alpha = rep.root.alpha;

    // Running mean of h has the closed form (1/v) * 2*sqrt(v)*sin(alpha ln v).
    auto lhs_f = [alpha](double v) {
        const double q = 2.0 * std::sin(alpha * std::log(v)) / std::sqrt(v);
        return q * q;
    };
    auto rhs_f = [alpha](double v) {
        const double h = h_eval(v, alpha);
        return h * h;
    };
    const num::QuadratureResult ql = num::integrate_adaptive(lhs_f, 1.0, B, quad_tol);
    const num::QuadratureResult qr = num::integrate_adaptive(rhs_f, 1.0, B, quad_tol);

    const double rhs = rep.d * qr.value;
    const double ratio = ql.value / rhs;
    const double quad_error =
        (ql.error_estimate + std::abs(ratio) * rep.d * qr.error_estimate) / std::abs(rhs);
    return {ql.value, rhs, ratio, quad_error};
}

namespace {

constexpr double certificate_outer_tol = 1e-12;

// M(g, t) by nested adaptive quadrature (inner tolerance one decade tighter).
double certificate_value(double t, double B,
                         const std::function<double(double)>& g_squared)
{
    const double gt = g_squared(t);
    if (!(gt > 0.0))
        throw NonPositiveWeight("weight_certificate: weight must be > 0 on (1, b/a)");
    auto outer_f = [&](double x) {
        const double inner =
            num::integrate_adaptive(g_squared, 1.0, x, certificate_outer_tol / 10.0).value;
        return inner / (x * x);
    };
    return num::integrate_adaptive(outer_f, t, B, certificate_outer_tol).value / gt;
}

} // namespace

std::vector<std::pair<double, double>> weight_certificate_profile(
    IntervalSpec iv, const std::function<double(double)>& g_squared, int grid_size)
{
    iv.validate();
    if (grid_size < 16)
        throw DomainError("weight_certificate: grid_size must be >= 16");
    const double B = iv.b / iv.a;
    const double L = std::log(B);

    std::vector<std::pair<double, double>> profile;
    profile.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double theta = (i + 0.5) / grid_size;  // half-cell inset keeps t strictly interior
        const double t = std::exp(theta * L);
        profile.emplace_back(t, certificate_value(t, B, g_squared));
    }
    return profile;
}

double weight_certificate(IntervalSpec iv,
                          const std::function<double(double)>& g_squared,
                          int grid_size)
{
    const auto profile = weight_certificate_profile(iv, g_squared, grid_size);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i].second > profile[imax].second) imax = i;
    double best = profile[imax].second;

    // Golden-section refinement on the neighboring cells of the argmax.
    const double B = iv.b / iv.a;
    double lo = imax > 0 ? profile[imax - 1].first : 1.0 + (profile[0].first - 1.0) * 0.5;
    double hi = imax + 1 < profile.size() ? profile[imax + 1].first
                                          : B - (B - profile.back().first) * 0.5;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = certificate_value(x1, B, g_squared);
    double f2 = certificate_value(x2, B, g_squared);
    for (int it = 0; it < 40 && hi - lo > 1e-10 * B; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = certificate_value(x2, B, g_squared);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = certificate_value(x1, B, g_squared);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

std::pair<double, double> scaled_deficit_range(std::span<const double> L_values)
{
    if (L_values.empty())
        throw DomainError("scaled_deficit_range: empty sweep");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double L : L_values) {
        if (!(L >= 10.0))
            throw DomainError("scaled_deficit_range: requires L >= 10");
        const AlphaRoot r = alpha_solve(L);
        const double v = (4.0 - alpha_to_constant(r)) * L * L;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

} // namespace hardy
