#include "hardy/num/log_gamma.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy::num {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

} // namespace

std::complex<double> log_gamma(std::complex<double> z)
{
    constexpr double pi = std::numbers::pi;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);

    const std::complex<double> zm = z - 1.0;
    std::complex<double> s = lanczos_c[0];
    for (int i = 1; i < 9; ++i)
        s += lanczos_c[i] / (zm + static_cast<double>(i));
    const std::complex<double> t = zm + (lanczos_g + 0.5);
    return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(s);
}

} // namespace hardy::num
