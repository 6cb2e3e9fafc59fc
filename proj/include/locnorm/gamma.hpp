#pragma once

#include <complex>

namespace locnorm {

using cplx = std::complex<double>;

// Lanczos approximation (g = 7, 9 terms) with reflection for Re z < 1/2.
// Relative error is around 1e-15 away from the poles.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
cplx reciprocal_gamma(cplx z);  // entire

cplx gamma_R(cplx s);  // pi^{-s/2} Gamma(s/2)
cplx gamma_C(cplx s);  // 2 (2 pi)^{-s} Gamma(s)
cplx reciprocal_gamma_R(cplx s);
cplx reciprocal_gamma_C(cplx s);

}  // namespace locnorm
