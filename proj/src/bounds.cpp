#include <locnorm/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace locnorm {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

cplx product_ratio(cplx x, const std::vector<RootMult>& zeros, const std::vector<RootMult>& poles) {
  cplx v = 1.0;
  for (const auto& z : zeros) v *= std::pow(x - z.value, z.multiplicity);
  for (const auto& p : poles) v /= std::pow(x - p.value, p.multiplicity);
  return v;
}

int count(const std::vector<RootMult>& v) {
  int c = 0;
  for (const auto& x : v) c += x.multiplicity;
  return c;
}

void bump(std::vector<RootMult>& v, cplx x, double tol) {
  for (auto& e : v)
    if (std::abs(e.value - x) <= tol) {
      ++e.multiplicity;
      return;
    }
  v.push_back({x, 1});
}

bool take(std::vector<RootMult>& v, cplx x, double tol) {
  for (auto it = v.begin(); it != v.end(); ++it)
    if (std::abs(it->value - x) <= tol) {
      if (--it->multiplicity == 0) v.erase(it);
      return true;
    }
  return false;
}

double factorial(int a) {
  double f = 1.0;
  for (int i = 2; i <= a; ++i) f *= i;
  return f;
}

void require_disc_shape(const DiscRationalDescriptor& f) {
  if (f.l < f.natural_l())
    throw CertificateError("declared l = " + std::to_string(f.l) + " is below the growth order " +
                           std::to_string(f.natural_l()) + " at infinity");
  if (!(f.bound_on_circle > 0.0)) throw CertificateError("bound on the unit circle must be positive");
  for (const auto& z : f.zeros)
    if (z.value == 0.0) throw std::invalid_argument("zeros at the origin belong in z^m");
}

}  // namespace

cplx DiscRationalDescriptor::evaluate(cplx z) const {
  return scale * std::pow(z, m) * product_ratio(z, zeros, poles);
}

int DiscRationalDescriptor::pole_count() const { return count(poles); }
int DiscRationalDescriptor::zero_count() const { return count(zeros); }

DiscRationalDescriptor blaschke_reflect_disc(const DiscRationalDescriptor& f) {
  require_disc_shape(f);
  DiscRationalDescriptor g = f;
  g.poles.clear();
  for (const auto& p : f.poles) {
    double r = std::abs(p.value);
    if (std::fabs(r - 1.0) <= 1e-12) throw CertificateError("pole on the unit circle at " + num(p.value.real()) + "+" + num(p.value.imag()) + "i");
    if (r < 1.0) throw CertificateError("pole inside the unit disc");
    // (z - rho)/(1 - conj(rho) z) = -(z - rho) / (conj(rho) (z - 1/conj(rho)))
    g.scale /= std::pow(-std::conj(p.value), p.multiplicity);
    g.poles.push_back({1.0 / std::conj(p.value), p.multiplicity});
  }
  g.m = f.m - f.l;
  g.l = std::max(0, g.natural_l());
  return g;
}

double delta_constant(int q, int n) {
  if (q < 2 || n < 1) throw std::invalid_argument("delta_constant needs q >= 2 and n >= 1");
  return std::min(2.0, std::pow(static_cast<double>(q), 2.0 / (1.0 + static_cast<double>(n) * n)));
}

BoundCertificate annulus_certificate(const DiscRationalDescriptor& f, int q, int n) {
  require_disc_shape(f);
  const double delta = delta_constant(q, n);
  for (const auto& p : f.poles)
    if (std::abs(p.value) <= delta)
      throw CertificateError("pole of modulus " + num(std::abs(p.value)) + " lies inside the disc of radius delta = " +
                             num(delta));
  const double R = 0.5 * (1.0 + delta);
  const double C = f.m >= 0 ? 1.0 : std::pow(2.0 / (1.0 + delta), f.m);
  const int l_eff = std::max(f.l, 0);
  const int r = f.pole_count();
  BoundCertificate c;
  c.region = RegionKind::annulus;
  c.inner = 2.0 / (1.0 + delta);
  c.outer = R;
  c.bound = f.bound_on_circle * C * std::pow(R, l_eff) * std::pow(7.0 / (delta - 1.0), r);
  c.constants = {{"delta", delta}, {"C", C}, {"l", static_cast<double>(l_eff)}, {"r", static_cast<double>(r)},
                 {"B", f.bound_on_circle}, {"pole_factor", 7.0 / (delta - 1.0)}, {"m", static_cast<double>(f.m)}};
  return c;
}

cplx StripRational::evaluate(cplx s) const { return scale * product_ratio(s, zeros, poles); }

void StripRational::multiply_factor(cplx zero, cplx pole, double tol) {
  if (!take(poles, zero, tol)) bump(zeros, zero, tol);
  if (!take(zeros, pole, tol)) bump(poles, pole, tol);
}

StripFunctionDescriptor describe_strip_function(const StripRational& f, const std::vector<cplx>& progressions,
                                                double bound_on_axis) {
  StripFunctionDescriptor d;
  d.progressions = progressions;
  d.r = static_cast<int>(progressions.size());
  d.bound_on_axis = bound_on_axis;
  d.f = f;
  double min_abs_re = 0.5;
  for (const auto& p : f.poles) {
    int containing = 0;
    for (const auto& rho : progressions) {
      double j = rho.real() - p.value.real();
      if (std::fabs(rho.imag() - p.value.imag()) <= 1e-9 && j > -1e-9 && std::fabs(j - std::round(j)) <= 1e-9)
        ++containing;
    }
    if (containing < p.multiplicity)
      throw CertificateError("pole " + num(p.value.real()) + "+" + num(p.value.imag()) +
                             "i is not covered by the listed progressions");
    if (std::fabs(p.value.real()) <= 1e-12) throw CertificateError("pole on the imaginary axis");
    d.M_plus = std::max(d.M_plus, p.value.real());
    d.M_minus = std::max(d.M_minus, -p.value.real());
    min_abs_re = std::min(min_abs_re, std::fabs(p.value.real()));
  }
  d.delta = min_abs_re;
  return d;
}

std::vector<ReflectionFactor> strip_reflection_factors(const std::vector<cplx>& progressions, double M_minus,
                                                       double delta) {
  std::vector<ReflectionFactor> out;
  for (std::size_t i = 0; i < progressions.size(); ++i) {
    const cplx rho = progressions[i];
    int lo = std::max(0, static_cast<int>(std::ceil(rho.real() + delta - 1e-12)));
    int hi = static_cast<int>(std::floor(rho.real() + M_minus + 1e-12));
    for (int j = lo; j <= hi; ++j)
      out.push_back({static_cast<int>(i), j, rho - static_cast<double>(j), static_cast<double>(j) - std::conj(rho)});
  }
  return out;
}

StripRational strip_blaschke(const StripRational& f, const std::vector<cplx>& progressions, double M_minus,
                             double delta) {
  StripRational g = f;
  for (const auto& fac : strip_reflection_factors(progressions, M_minus, delta)) g.multiply_factor(fac.zero, fac.pole);
  return g;
}

BoundCertificate strip_certificate(const StripFunctionDescriptor& d, double eps) {
  if (!(d.delta > 0.0) || d.delta > 0.5) throw CertificateError("strip delta must lie in (0, 1/2]");
  if (d.M_plus < 0.0 || d.M_minus < 0.0 || d.r < 0) throw CertificateError("strip constants must be nonnegative");
  if (!(eps > 0.0) || eps >= d.delta)
    throw CertificateError("eps = " + num(eps) + " must lie strictly between 0 and delta = " + num(d.delta));
  BoundCertificate c;
  c.region = RegionKind::strip;
  c.outer = d.delta - eps;
  c.bound = d.bound_on_axis * std::pow((d.M_plus + d.M_minus + 1.0) / eps, d.r);
  c.constants = {{"M_plus", d.M_plus}, {"M_minus", d.M_minus}, {"delta", d.delta},
                 {"eps", eps},         {"r", static_cast<double>(d.r)}, {"B", d.bound_on_axis}};
  return c;
}

KTypeInputs ktype_bound_inputs(double gamma_norm, double c) {
  if (gamma_norm < 0.0) throw std::invalid_argument("K-type norm must be nonnegative");
  if (!(c > 0.0)) throw std::invalid_argument("model constant c must be positive");
  return {c, c * (1.0 + gamma_norm), static_cast<int>(std::ceil(c))};
}

BoundCertificate cauchy_derivative_certificate(const BoundCertificate& base, int alpha, double rho) {
  if (alpha < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (!(rho > 0.0)) throw CertificateError("Cauchy radius must be positive");
  BoundCertificate c = base;
  c.measured_sup.reset();
  if (base.region == RegionKind::strip) {
    if (rho >= base.outer) throw CertificateError("Cauchy radius " + num(rho) + " exceeds the strip half-width " + num(base.outer));
    c.outer = base.outer - rho;
  } else {
    if (2.0 * rho >= base.outer - base.inner)
      throw CertificateError("Cauchy radius " + num(rho) + " does not fit inside the annulus");
    c.inner = base.inner + rho;
    c.outer = base.outer - rho;
  }
  c.bound = base.bound * factorial(alpha) / std::pow(rho, alpha);
  c.constants["alpha"] = alpha;
  c.constants["rho"] = rho;
  c.constants["base_bound"] = base.bound;
  return c;
}

ComposedArchimedean composed_archimedean_bound(double gamma_norm, double c, double delta, int alpha) {
  if (!(delta > 0.0) || delta > 0.5) throw CertificateError("delta must lie in (0, 1/2]");
  auto in = ktype_bound_inputs(gamma_norm, c);
  StripFunctionDescriptor d;
  d.r = in.r;
  d.M_plus = in.M_plus;
  d.M_minus = in.M_minus;
  d.delta = delta;
  ComposedArchimedean out;
  out.certificate = cauchy_derivative_certificate(strip_certificate(d, delta / 2.0), alpha, delta / 4.0);
  out.gamma_degree = in.r;
  out.delta_degree = in.r + alpha;
  out.k_prime = in.r + alpha;
  out.c_prime = factorial(alpha) * std::pow(4.0, alpha) * std::pow(2.0 * (2.0 * c + 1.0), in.r);
  out.certificate.constants["c"] = c;
  out.certificate.constants["gamma_norm"] = gamma_norm;
  return out;
}

UniformNonarchCertificate uniform_norm_certificate_nonarch(const UniformNonarchInput& in) {
  const double delta = delta_constant(in.q, in.n);
  int r = 0;
  for (const auto& p : in.poles) {
    if (std::abs(p.value) <= delta)
      throw CertificateError("pole of modulus " + num(std::abs(p.value)) + " lies inside the disc of radius delta = " +
                             num(delta) + "; the exponents violate the holomorphy margin");
    r += p.multiplicity;
  }
  if (r > in.r_cap) throw CertificateError("pole count " + std::to_string(r) + " exceeds the cap " + std::to_string(in.r_cap));
  DiscRationalDescriptor model;
  model.m = in.m_floor;
  model.l = in.l_cap;
  model.poles.assign(in.r_cap, RootMult{cplx(2.0 * delta, 0.0), 1});
  model.l = std::max(in.l_cap, model.natural_l());
  UniformNonarchCertificate out;
  out.annulus = annulus_certificate(model, in.q, in.n);
  out.annulus.constants["r_cap"] = in.r_cap;
  out.annulus.constants["l_cap"] = in.l_cap;
  out.strip = out.annulus;
  out.strip.region = RegionKind::strip;
  out.strip.inner = 0.0;
  out.strip.outer = std::log(out.annulus.outer) / std::log(static_cast<double>(in.q));
  out.derivative = cauchy_derivative_certificate(out.strip, in.alpha, out.strip.outer / 2.0);
  return out;
}

SampleResult sampling_oracle(const std::function<cplx(cplx)>& f, const SampleRegion& region) {
  SampleResult res;
  auto visit = [&](cplx x) {
    cplx v;
    try {
      v = f(x);
    } catch (const std::exception&) {
      ++res.skipped;
      res.flagged = true;
      return;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      ++res.skipped;
      res.flagged = true;
      return;
    }
    ++res.evaluated;
    double a = std::abs(v);
    if (a > res.sup) {
      res.sup = a;
      res.argmax = x;
    }
  };
  const double two_pi = 2.0 * M_PI;
  auto lerp = [](double a, double b, int i, int n) { return n <= 1 ? a : a + (b - a) * i / (n - 1); };
  switch (region.kind) {
    case SampleRegion::Kind::circle:
      for (int k = 0; k < region.n_angular; ++k) visit(std::polar(region.inner, two_pi * k / region.n_angular));
      break;
    case SampleRegion::Kind::annulus:
      for (int i = 0; i < region.n_radial; ++i) {
        double rad = lerp(region.inner, region.outer, i, region.n_radial);
        for (int k = 0; k < region.n_angular; ++k) visit(std::polar(rad, two_pi * k / region.n_angular));
      }
      break;
    case SampleRegion::Kind::strip:
      for (int i = 0; i < region.n_radial; ++i) {
        double re = lerp(-region.outer, region.outer, i, region.n_radial);
        for (int k = 0; k < region.n_angular; ++k)
          visit({re, lerp(-region.im_extent, region.im_extent, k, region.n_angular)});
      }
      break;
  }
  return res;
}

SampleRegion annulus_region(const BoundCertificate& c, int n_angular, int n_radial) {
  SampleRegion r;
  r.kind = SampleRegion::Kind::annulus;
  r.inner = c.inner;
  r.outer = c.outer;
  r.n_angular = n_angular;
  r.n_radial = n_radial;
  return r;
}

SampleRegion strip_region(const BoundCertificate& c, double im_extent, int n_im, int n_re) {
  SampleRegion r;
  r.kind = SampleRegion::Kind::strip;
  r.outer = c.outer;
  r.im_extent = im_extent;
  r.n_angular = n_im;
  r.n_radial = n_re;
  return r;
}

}  // namespace locnorm
