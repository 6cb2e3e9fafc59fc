#include <locnorm/gamma.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace locnorm {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(z) for Re z >= 1/2.
cplx lanczos_log(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lanczos_log(1.0 - z);
  return lanczos_log(z);
}

cplx gamma(cplx z) {
  if (z.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * z) * std::exp(lanczos_log(1.0 - z)));
  return std::exp(lanczos_log(z));
}

cplx reciprocal_gamma(cplx z) {
  if (z.real() < 0.5) return std::sin(std::numbers::pi * z) * std::exp(lanczos_log(1.0 - z)) / std::numbers::pi;
  return std::exp(-lanczos_log(z));
}

cplx gamma_R(cplx s) { return std::exp(-0.5 * s * std::log(std::numbers::pi)) * gamma(0.5 * s); }

cplx gamma_C(cplx s) { return 2.0 * std::exp(-s * std::log(2.0 * std::numbers::pi)) * gamma(s); }

cplx reciprocal_gamma_R(cplx s) { return std::exp(0.5 * s * std::log(std::numbers::pi)) * reciprocal_gamma(0.5 * s); }

cplx reciprocal_gamma_C(cplx s) { return 0.5 * std::exp(s * std::log(2.0 * std::numbers::pi)) * reciprocal_gamma(s); }

}  // namespace locnorm
