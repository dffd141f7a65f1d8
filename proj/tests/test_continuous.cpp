#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "hardy/continuous.hpp"
#include "hardy/errors.hpp"

using namespace hardy;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("continuous") {

TEST_CASE("sharp constant on (1,2)")
{
    const SharpConstantReport rep = sharp_constant({1.0, 2.0});
    CHECK(rep.L == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(rep.root.alpha == doctest::Approx(2.5459507865150138).epsilon(1e-13));
    CHECK(rep.d == doctest::Approx(0.14854723609108770).epsilon(1e-13));
    CHECK(rep.d > 0.0);
    CHECK(rep.d < 4.0);
}

TEST_CASE("depends only on the ratio b/a")
{
    const double d12 = sharp_constant({1.0, 2.0}).d;
    const double d36 = sharp_constant({3.0, 6.0}).d;
    CHECK(d12 == d36);  // identical L = ln 2 bit-for-bit
}

TEST_CASE("scale invariance under random rescaling")
{
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> ua(0.01, 10.0);
    std::uniform_real_distribution<double> uratio(1.1, 1e6);
    std::uniform_real_distribution<double> uscale(1e-3, 1e3);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ua(rng);
        const double b = a * uratio(rng);
        const double s = uscale(rng);
        const double d1 = sharp_constant({a, b}).d;
        const double d2 = sharp_constant({s * a, s * b}).d;
        CHECK(std::abs(d1 - d2) <= 1e-15 * d1);
    }
}

TEST_CASE("d(1,b) is strictly increasing in b")
{
    double prev = 0.0;
    for (double b : {1.5, 2.0, 4.0, 10.0, 100.0, 1e4, 1e6}) {
        const double d = sharp_constant({1.0, b}).d;
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("d approaches 4 for very long intervals")
{
    // 4 - d = 16 a^2/(1+4a^2) <= 16 pi^2 / L^2
    const double d = alpha_to_constant(alpha_solve(1e4));
    CHECK(d > 4.0 - 16.0 * pi * pi / 1e8);
    CHECK(d < 4.0);
}

TEST_CASE("extremal function values")
{
    const ExtremalFunctionSpec f = extremal_function({1.0, 4.0});
    const double alpha = f.root.alpha;
    CHECK(extremal_eval(f, 1.0) == 2.0 * alpha);  // ln 1 = 0 exactly
    // zero at the right endpoint, relative to the local scale
    const double local = (1.0 + 2.0 * alpha) / 2.0;  // b^(-1/2) (1 + 2 alpha)
    CHECK(std::abs(extremal_eval(f, 4.0)) <= 1e-12 * local);
    // interior value against a direct evaluation of the formula
    const double x = std::sqrt(4.0);
    const double u = x / 1.0;
    const double direct =
        (2.0 * alpha * std::cos(alpha * std::log(u)) + std::sin(alpha * std::log(u))) /
        std::sqrt(u);
    CHECK(extremal_eval(f, x) == doctest::Approx(direct).epsilon(1e-15));
    CHECK_THROWS_AS(extremal_eval(f, 0.5), hardy::OutOfDomain);
    CHECK_THROWS_AS(extremal_eval(f, 4.5), hardy::OutOfDomain);
}

TEST_CASE("extremal function is positive, bounded and decreasing")
{
    const ExtremalFunctionSpec f = extremal_function({2.0, 50.0});
    const double alpha = f.root.alpha;
    const double a = 2.0, b = 50.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 400; ++i) {
        const double x = a * std::pow(b / a, i / 400.0);
        const double v = extremal_eval(f, x);
        const double u = x / a;
        CHECK(v > 0.0);
        CHECK(v < alpha * (2.0 + std::abs(std::log(u))) / std::sqrt(u));
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("derivative identity of the extremal profile")
{
    const ExtremalFunctionSpec f = extremal_function({1.0, 8.0});
    const double alpha = f.root.alpha;
    for (double u : {1.3, 2.0, 3.7, 6.5}) {
        const double step = 1e-6 * u;
        const double fd =
            (extremal_eval(f, u + step) - extremal_eval(f, u - step)) / (2.0 * step);
        const double formula = -(1.0 + 4.0 * alpha * alpha) /
                               (2.0 * u * std::sqrt(u)) *
                               std::sin(alpha * std::log(u));
        CHECK(fd == doctest::Approx(formula).epsilon(1e-6));
        CHECK(formula < 0.0);
    }
}

TEST_CASE("equality holds on reference intervals")
{
    for (const IntervalSpec iv : {IntervalSpec{1.0, 2.0}, IntervalSpec{0.5, 10.0}}) {
        const EqualityCheckReport rep = verify_equality(iv, 1e-10);
        CHECK(rep.lhs > 0.0);
        CHECK(rep.rhs > 0.0);
        CHECK(std::abs(rep.ratio - 1.0) <= 1e-8);
        CHECK(std::abs(rep.ratio - 1.0) <= 10.0 * rep.quad_error);
    }
}

TEST_CASE("quadrature sides match the elementary antiderivatives")
{
    const IntervalSpec iv{1.0, 2.0};
    const SharpConstantReport rep = sharp_constant(iv);
    const double alpha = rep.root.alpha;
    const double L = rep.L;
    const EqualityCheckReport eq = verify_equality(iv, 1e-10);

    // lhs = 4 int_0^L sin^2(alpha u) du = 2L - sin(2 alpha L)/alpha
    const double lhs_closed = 2.0 * L - std::sin(2.0 * alpha * L) / alpha;
    // int h^2 = (4a^2+1) L/2 + (4a^2-1) sin(2aL)/(4a) + 2 sin^2(aL)
    const double a2 = alpha * alpha;
    const double rhs_closed =
        rep.d * ((4.0 * a2 + 1.0) * L / 2.0 +
                 (4.0 * a2 - 1.0) * std::sin(2.0 * alpha * L) / (4.0 * alpha) +
                 2.0 * std::pow(std::sin(alpha * L), 2));
    CHECK(eq.lhs == doctest::Approx(lhs_closed).epsilon(1e-9));
    CHECK(eq.rhs == doctest::Approx(rhs_closed).epsilon(1e-9));
}

TEST_CASE("equality on random intervals within reported error")
{
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> ua(0.05, 20.0);
    std::uniform_real_distribution<double> ulogr(std::log(1.1), std::log(1e6));
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ua(rng);
        const double b = a * std::exp(ulogr(rng));
        const EqualityCheckReport rep = verify_equality({a, b}, 1e-10);
        CHECK(std::abs(rep.ratio - 1.0) <= 10.0 * std::max(rep.quad_error, 1e-12));
    }
}

TEST_CASE("certificate of the extremal weight is flat and equals d")
{
    const IntervalSpec iv{1.0, 2.0};
    const SharpConstantReport rep = sharp_constant(iv);
    const ExtremalFunctionSpec f = extremal_function(iv);
    auto weight = [&f](double u) { return extremal_eval(f, u); };

    const auto profile = weight_certificate_profile(iv, weight, 24);
    CHECK(profile.size() == 24);
    double lo = profile.front().second, hi = profile.front().second;
    for (const auto& [t, m] : profile) {
        CHECK(t > 1.0);
        CHECK(t < 2.0);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    CHECK(hi - lo <= 1e-6);
    const double max_m = weight_certificate(iv, weight, 24);
    CHECK(std::abs(max_m - rep.d) <= 1e-6);
}

TEST_CASE("constant weight gives a finite upper bound above d")
{
    const IntervalSpec iv{1.0, 2.0};
    const double d = sharp_constant(iv).d;
    const double bound = weight_certificate(iv, [](double) { return 1.0; }, 32);
    CHECK(bound >= d);
    // M(1, t) = ln 2 + 1/2 - ln t - 1/t, maximized toward t -> 1+
    CHECK(bound < std::log(2.0) + 0.5 - 1.0 + 1e-3);
    CHECK(std::isfinite(bound));
}

TEST_CASE("non-positive weights are rejected")
{
    const IntervalSpec iv{1.0, 2.0};
    CHECK_THROWS_AS(weight_certificate(iv, [](double u) { return 1.5 - u; }, 16),
                    hardy::NonPositiveWeight);
    CHECK_THROWS_AS(weight_certificate(iv, [](double) { return 1.0; }, 8),
                    hardy::DomainError);  // grid too small
}

TEST_CASE("scaled deficit sweep is positive, bounded, and converges")
{
    std::vector<double> Ls;
    for (int i = 0; i < 25; ++i)
        Ls.push_back(10.0 * std::pow(10.0, 3.0 * i / 24.0));
    const auto [lo, hi] = scaled_deficit_range(Ls);
    CHECK(lo > 0.0);
    CHECK(std::isfinite(hi));
    CHECK(hi < 4.0 * pi * pi * 16.0);

    const auto [v100, same100] = scaled_deficit_range(std::vector<double>{100.0});
    CHECK(v100 == same100);
    CHECK(std::abs(v100 - 16.0 * pi * pi) <= 0.2 * 16.0 * pi * pi);
    CHECK(v100 == doctest::Approx(151.21538079459665).epsilon(1e-10));

    const auto [v1e4, x] = scaled_deficit_range(std::vector<double>{1e4});
    CHECK(std::abs(v1e4 - 16.0 * pi * pi) < std::abs(v100 - 16.0 * pi * pi));
    CHECK_THROWS_AS(scaled_deficit_range(std::vector<double>{5.0}), hardy::DomainError);
}

TEST_CASE("invalid intervals are rejected")
{
    CHECK_THROWS_AS(sharp_constant({0.0, 1.0}), hardy::InvalidInterval);
    CHECK_THROWS_AS(sharp_constant({-1.0, 1.0}), hardy::InvalidInterval);
    CHECK_THROWS_AS(sharp_constant({2.0, 1.0}), hardy::InvalidInterval);
    CHECK_THROWS_AS(sharp_constant({1.0, 1.0 + 1e-13}), hardy::InvalidInterval);
    CHECK_THROWS_AS(verify_equality({1.0, 2.0}, 0.0), hardy::DomainError);
}

} // TEST_SUITE
