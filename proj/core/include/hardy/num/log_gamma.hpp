#pragma once

#include <complex>

namespace hardy::num {

// Principal-branch log-gamma of a complex argument (Lanczos approximation,
// reflection for Re z < 1/2). Aimed at arguments near the real axis; gives
// 13+ significant digits for Re z in [1/4, 2], |Im z| <= 1.
//
// Throws PoleError at nonpositive real integers.
std::complex<double> log_gamma(std::complex<double> z);

} // namespace hardy::num
