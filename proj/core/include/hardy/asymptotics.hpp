#pragma once

#include <cstddef>

namespace hardy {

// Argument of the gamma ratio Gamma(1/2 - ix)^3 / Gamma(1 - 2ix), whose
// slope at 0 is gamma_E + ln 64 = 4.7360987...; defined for |x| < 1/2.
struct GammaArgReport {
    double x = 0.0;
    double arg_value = 0.0;       // radians
    double slope_estimate = 0.0;  // arg_value / x (NaN at x = 0)
};

GammaArgReport gamma_ratio_arg(double x);

// Smallest-zero asymptote pi / (gamma_E + ln 64 + ln n), n >= 2.
double zero_asymptote(std::size_t n);

// d_n asymptote 4 - 16*pi^2 / (4*pi^2 + (gamma_E + 6 ln 2 + ln n)^2);
// algebraically equal to 4 / (1 + 4 * zero_asymptote(n)^2). n >= 2.
double dn_asymptote(std::size_t n);

// Gap between the asymptote and the lower bound 4 - 16*pi^2/ln^2(n+1),
// normalized by its leading term 32*pi^2*(gamma_E + ln 64)/ln^3 n; tends
// to 1 from below as n grows. n >= 3.
double difference_law(std::size_t n);

} // namespace hardy
