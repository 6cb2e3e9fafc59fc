#pragma once

#include <locnorm/gamma.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locnorm {

class CertificateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct RootMult {
  cplx value;
  int multiplicity = 1;
};

// f(z) = scale z^m prod (z - zeta)^mult / prod (z - rho)^mult, holomorphic
// on a punctured disc around 0. `l` is the declared order bound at infinity
// (f z^{-l} stays bounded) and `bound_on_circle` the sup of |f| on |z| = 1.
struct DiscRationalDescriptor {
  cplx scale{1.0, 0.0};
  int m = 0;
  std::vector<RootMult> zeros;
  std::vector<RootMult> poles;
  int l = 0;
  double bound_on_circle = 1.0;

  cplx evaluate(cplx z) const;
  int pole_count() const;
  int zero_count() const;
  int natural_l() const { return m + zero_count() - pole_count(); }
};

DiscRationalDescriptor blaschke_reflect_disc(const DiscRationalDescriptor& f);

enum class RegionKind { annulus, strip };

struct BoundCertificate {
  RegionKind region = RegionKind::annulus;
  double inner = 0.0;  // annulus inner radius, or 0 for a strip
  double outer = 0.0;  // annulus outer radius, or strip half-width
  double bound = 0.0;
  std::map<std::string, double> constants;
  std::optional<double> measured_sup;
};

double delta_constant(int q, int n);

BoundCertificate annulus_certificate(const DiscRationalDescriptor& f, int q, int n);

// f(s) = scale prod (s - zeta) / prod (s - p).
struct StripRational {
  cplx scale{1.0, 0.0};
  std::vector<RootMult> zeros;
  std::vector<RootMult> poles;

  cplx evaluate(cplx s) const;
  // Multiplies by (s - zero)/(s - pole), cancelling against existing roots.
  void multiply_factor(cplx zero, cplx pole, double tol = 1e-12);
};

// Poles of f lie in the union of rho_i - N. r counts progressions with
// multiplicity; M_plus, M_minus, delta as in the strip estimate. The
// progressions themselves may be omitted when only r is known.
struct StripFunctionDescriptor {
  std::vector<cplx> progressions;
  int r = 0;
  double M_plus = 0.0;
  double M_minus = 0.0;
  double delta = 0.5;
  double bound_on_axis = 1.0;
  std::optional<StripRational> f;
};

// Descriptor whose constants are read off the actual poles of f; each pole
// must sit in some progression.
StripFunctionDescriptor describe_strip_function(const StripRational& f, const std::vector<cplx>& progressions,
                                                double bound_on_axis = 1.0);

struct ReflectionFactor {
  int progression = 0;
  int j = 0;
  cplx zero;  // rho_i - j
  cplx pole;  // j - conj(rho_i)
};

std::vector<ReflectionFactor> strip_reflection_factors(const std::vector<cplx>& progressions, double M_minus,
                                                       double delta);
StripRational strip_blaschke(const StripRational& f, const std::vector<cplx>& progressions, double M_minus,
                             double delta);

BoundCertificate strip_certificate(const StripFunctionDescriptor& d, double eps);

struct KTypeInputs {
  double M_plus;
  double M_minus;
  int r;
};

KTypeInputs ktype_bound_inputs(double gamma_norm, double c);

BoundCertificate cauchy_derivative_certificate(const BoundCertificate& base, int alpha, double rho);

// Strip estimate at eps = delta/2 followed by a Cauchy estimate of order
// alpha with radius delta/4. The result has the shape c' ((1+|gamma|)/delta)^k'.
struct ComposedArchimedean {
  BoundCertificate certificate;
  double c_prime = 0.0;
  int k_prime = 0;
  int gamma_degree = 0;
  int delta_degree = 0;
};

ComposedArchimedean composed_archimedean_bound(double gamma_norm, double c, double delta, int alpha);

struct UniformNonarchInput {
  std::vector<RootMult> poles;  // z-plane
  int l_cap = 0;
  int r_cap = 0;
  int m_floor = 0;
  int q = 2;
  int n = 2;
  int alpha = 1;
};

struct UniformNonarchCertificate {
  BoundCertificate annulus;
  BoundCertificate strip;       // pulled back under z = q^{-s}
  BoundCertificate derivative;  // Cauchy estimate on the strip
};

UniformNonarchCertificate uniform_norm_certificate_nonarch(const UniformNonarchInput& in);

struct SampleRegion {
  enum class Kind { circle, annulus, strip } kind = Kind::circle;
  double inner = 1.0;  // circle radius / annulus inner radius
  double outer = 1.0;  // annulus outer radius / strip half-width
  double im_extent = 50.0;
  int n_angular = 2048;
  int n_radial = 1;
};

struct SampleResult {
  double sup = 0.0;
  cplx argmax{0.0, 0.0};
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  bool flagged = false;
};

SampleResult sampling_oracle(const std::function<cplx(cplx)>& f, const SampleRegion& region);

SampleRegion annulus_region(const BoundCertificate& c, int n_angular = 2048, int n_radial = 64);
SampleRegion strip_region(const BoundCertificate& c, double im_extent, int n_im = 256, int n_re = 256);

}  // namespace locnorm
