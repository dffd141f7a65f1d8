#include "hardy/asymptotics.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/num/log_gamma.hpp"

namespace hardy {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = std::numbers::egamma;
const double ln64 = std::log(64.0);
} // namespace

GammaArgReport gamma_ratio_arg(double x)
{
    if (!(std::abs(x) < 0.5))
        throw OutOfRange("gamma_ratio_arg: requires |x| < 1/2");
    const double arg = 3.0 * num::log_gamma({0.5, -x}).imag() -
                       num::log_gamma({1.0, -2.0 * x}).imag();
    const double slope =
        x != 0.0 ? arg / x : std::numeric_limits<double>::quiet_NaN();
    return {x, arg, slope};
}

double zero_asymptote(std::size_t n)
{
    if (n < 2)
        throw TooSmall("zero_asymptote: requires n >= 2");
    return pi / (euler_gamma + ln64 + std::log(static_cast<double>(n)));
}

double dn_asymptote(std::size_t n)
{
    if (n < 2)
        throw TooSmall("dn_asymptote: requires n >= 2");
    const double s = euler_gamma + 6.0 * std::log(2.0) + std::log(static_cast<double>(n));
    return 4.0 - 16.0 * pi * pi / (4.0 * pi * pi + s * s);
}

double difference_law(std::size_t n)
{
    if (n < 3)
        throw TooSmall("difference_law: requires n >= 3");
    const double nn = static_cast<double>(n);
    const double l1 = std::log(nn + 1.0);
    const double gap = dn_asymptote(n) - (4.0 - 16.0 * pi * pi / (l1 * l1));
    const double u = std::log(nn);
    return gap * u * u * u / (16.0 * pi * pi * 2.0 * (euler_gamma + ln64));
}

} // namespace hardy
