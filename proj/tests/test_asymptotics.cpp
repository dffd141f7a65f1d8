#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardy/asymptotics.hpp"
#include "hardy/dual_hahn.hpp"
#include "hardy/errors.hpp"

using namespace hardy;

namespace {
constexpr double euler_gamma = std::numbers::egamma;
const double slope_limit = euler_gamma + std::log(64.0);  // 4.7360987482612047
}

TEST_SUITE("asymptotics") {

TEST_CASE("argument vanishes at zero and is odd")
{
    CHECK(gamma_ratio_arg(0.0).arg_value == 0.0);
    for (double x : {0.001, 0.01, 0.1, 0.4}) {
        const double plus = gamma_ratio_arg(x).arg_value;
        const double minus = gamma_ratio_arg(-x).arg_value;
        CHECK(std::abs(plus + minus) <= 1e-12);
    }
}

TEST_CASE("slope at small arguments")
{
    CHECK(gamma_ratio_arg(1e-3).slope_estimate ==
          doctest::Approx(4.7360935393606082).epsilon(1e-10));
    CHECK(std::abs(gamma_ratio_arg(1e-3).slope_estimate - slope_limit) <= 1e-4);
    CHECK(gamma_ratio_arg(1e-2).slope_estimate ==
          doctest::Approx(4.7355779834052551).epsilon(1e-10));
    CHECK(gamma_ratio_arg(1e-1).slope_estimate ==
          doctest::Approx(4.6852393237417536).epsilon(1e-10));
}

TEST_CASE("slope deviations shrink quadratically")
{
    const double dev2 = std::abs(gamma_ratio_arg(1e-2).slope_estimate - slope_limit);
    const double dev3 = std::abs(gamma_ratio_arg(1e-3).slope_estimate - slope_limit);
    CHECK(dev2 / dev3 == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("quadratic fit through three slopes recovers the limit")
{
    const double xs[3] = {1e-1, 1e-2, 1e-3};
    double u[3], s[3];
    for (int i = 0; i < 3; ++i) {
        u[i] = xs[i] * xs[i];
        s[i] = gamma_ratio_arg(xs[i]).slope_estimate;
    }
    // intercept of the parabola in u = x^2 through the three points
    const double l0 = (0.0 - u[1]) * (0.0 - u[2]) / ((u[0] - u[1]) * (u[0] - u[2]));
    const double l1 = (0.0 - u[0]) * (0.0 - u[2]) / ((u[1] - u[0]) * (u[1] - u[2]));
    const double l2 = (0.0 - u[0]) * (0.0 - u[1]) / ((u[2] - u[0]) * (u[2] - u[1]));
    const double intercept = l0 * s[0] + l1 * s[1] + l2 * s[2];
    CHECK(std::abs(intercept - 4.7360987) <= 1e-5);
}

TEST_CASE("domain of the argument expansion")
{
    CHECK_THROWS_AS(gamma_ratio_arg(0.5), hardy::OutOfRange);
    CHECK_THROWS_AS(gamma_ratio_arg(-0.6), hardy::OutOfRange);
    CHECK_NOTHROW(gamma_ratio_arg(0.499));
}

TEST_CASE("zero asymptote formula")
{
    CHECK(zero_asymptote(10000) == doctest::Approx(0.22526127468846822).epsilon(1e-13));
    double prev = 1.0;
    for (std::size_t n : {2ul, 10ul, 100ul, 10000ul, 1000000ul}) {
        const double z = zero_asymptote(n);
        CHECK(z < prev);
        CHECK(z > 0.0);
        prev = z;
    }
    CHECK(zero_asymptote(1000000000000ul) < 0.1);
    CHECK_THROWS_AS(zero_asymptote(1), hardy::TooSmall);
}

TEST_CASE("norm asymptote formula and its identity with the zero asymptote")
{
    CHECK(dn_asymptote(10000) == doctest::Approx(3.3251021330658302).epsilon(1e-13));
    CHECK(dn_asymptote(100) == doctest::Approx(2.7540120905111780).epsilon(1e-13));
    for (std::size_t n : {2ul, 10ul, 1000ul, 1000000ul, 1000000000ul}) {
        const double za = zero_asymptote(n);
        const double via_zero = 4.0 / (1.0 + 4.0 * za * za);
        CHECK(std::abs(dn_asymptote(n) - via_zero) <= 1e-14 * dn_asymptote(n));
    }
    CHECK_THROWS_AS(dn_asymptote(1), hardy::TooSmall);
}

TEST_CASE("asymptote approaches the computed norm from the zero route")
{
    double prev = 1e9;
    for (std::size_t n : {100ul, 1000ul, 10000ul}) {
        const double gap = std::abs(dn_hahn(n).d_n - dn_asymptote(n));
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("asymptote sits inside the two-sided bounds from n = 3 on")
{
    for (std::size_t n = 3; n <= 200; ++n) {
        const auto [lo, hi] = dn_bounds(n);
        CHECK(lo < dn_asymptote(n));
        CHECK(dn_asymptote(n) < hi);
    }
    for (std::size_t n : {1000ul, 100000ul, 10000000ul}) {
        const auto [lo, hi] = dn_bounds(n);
        CHECK(lo < dn_asymptote(n));
        CHECK(dn_asymptote(n) < hi);
    }
}

TEST_CASE("normalized gap between the bound and the asymptote tends to one")
{
    CHECK(difference_law(1000) == doctest::Approx(0.53027262994814469).epsilon(1e-12));
    CHECK(difference_law(10000) == doctest::Approx(0.61980525788768634).epsilon(1e-12));
    CHECK(difference_law(100000) == doctest::Approx(0.68463753090500867).epsilon(1e-12));
    CHECK(difference_law(1000000) == doctest::Approx(0.73288543931739015).epsilon(1e-12));

    double prev_dev = 1.0;
    for (std::size_t n : {1000ul, 10000ul, 100000ul, 1000000ul, 100000000ul}) {
        const double dev = std::abs(difference_law(n) - 1.0);
        CHECK(dev < prev_dev);
        prev_dev = dev;
    }
    CHECK_THROWS_AS(difference_law(2), hardy::TooSmall);
}

} // TEST_SUITE
