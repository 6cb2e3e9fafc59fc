#include <locnorm/lfactors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

namespace locnorm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ExactReal frac_part(const ExactReal& x) {
  if (x.is_exact()) return ExactReal(*x.exact() - Rational(x.exact()->floor()));
  return ExactReal::inexact(x.value() - std::floor(x.value()));
}

ExactReal half(int n) { return ExactReal(Rational(n, 2)); }

void require_field(const LocalField& f, const SquareIntegrableBlock& b) {
  if (!legal_for(f, b)) throw std::invalid_argument(describe(b) + " is not a legal block over " + to_string(f));
}

// L(s + shift, b1 x b2) for twist-free blocks, twists passed through `shift`.
LFactorDescriptor pair_atoms(const LocalField& f, const SquareIntegrableBlock& b1, const SquareIntegrableBlock& b2,
                             const ExactReal& shift) {
  LFactorDescriptor out(f);
  const double t = shift.value();
  auto gc = [&](double mu) { out.add(GammaAtom{GammaKind::complex, {t + mu, 0.0}}); };
  auto gr = [&](double mu) { out.add(GammaAtom{GammaKind::real, {t + mu, 0.0}}); };
  if (const auto* d1 = std::get_if<RealDS>(&b1)) {
    if (const auto* d2 = std::get_if<RealDS>(&b2)) {
      gc(0.5 * std::abs(d1->k - d2->k));
      gc(0.5 * std::abs(d1->k + d2->k));
    } else {
      gc(0.5 * std::abs(d1->k));
    }
    return out;
  }
  if (const auto* c1 = std::get_if<RealChar>(&b1)) {
    if (const auto* d2 = std::get_if<RealDS>(&b2))
      gc(0.5 * std::abs(d2->k));
    else
      gr((c1->eps + std::get<RealChar>(b2).eps) % 2);
    return out;
  }
  if (const auto* x1 = std::get_if<ComplexChar>(&b1)) {
    gc(0.5 * std::abs(x1->r + std::get<ComplexChar>(b2).r));
    return out;
  }
  const auto& s1 = std::get<Segment>(b1);
  const auto& s2 = std::get<Segment>(b2);
  if (!s2.cusp.same_twist_class(s1.cusp.dual())) return out;
  const int a = s1.cusp.twist_order;
  for (int j = 1; j <= std::min(s1.length, s2.length); ++j) {
    ExactReal c = shift + half(s1.length + s2.length) - ExactReal(j);
    out.add(PAdicAtom{ExactReal(a) * c, ExactReal(0), a});
  }
  return out;
}

std::string format_shift_term(cplx mu) {
  std::string s;
  if (mu.real() != 0.0) {
    s += mu.real() > 0 ? "+" : "-";
    s += format_real(std::fabs(mu.real()));
  }
  if (mu.imag() != 0.0) {
    s += mu.imag() > 0 ? "+" : "-";
    s += format_real(std::fabs(mu.imag())) + "i";
  }
  return s;
}

}  // namespace

std::string format_real(double x) {
  if (auto r = Rational::from_double(x, 64)) return r->str();
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

cplx PAdicAtom::inverse_root(int q) const {
  return std::exp(cplx(-decay.value() * std::log(static_cast<double>(q)), kTwoPi * turns.value()));
}

PAdicAtom PAdicAtom::from_inverse_root(cplx alpha, int period, int q) {
  if (alpha == 0.0) throw std::invalid_argument("inverse root must be nonzero");
  double x = -std::log(std::abs(alpha)) / std::log(static_cast<double>(q));
  double th = std::arg(alpha) / kTwoPi;
  return PAdicAtom{ExactReal::inexact(x), frac_part(ExactReal::inexact(th)), period};
}

void LFactorDescriptor::add(const GammaAtom& a) {
  if (!field_.archimedean()) throw std::invalid_argument("Gamma atom in a nonarchimedean descriptor");
  gamma_.push_back(a);
}

void LFactorDescriptor::add(const PAdicAtom& a) {
  if (field_.archimedean()) throw std::invalid_argument("p-adic atom in an archimedean descriptor");
  if (a.period < 1) throw std::invalid_argument("p-adic atom period must be positive");
  PAdicAtom b = a;
  b.turns = frac_part(a.turns);
  padic_.push_back(b);
}

void LFactorDescriptor::append(const LFactorDescriptor& o) {
  if (!(o.field_ == field_) && !o.trivial()) throw std::invalid_argument("descriptors over different fields");
  for (const auto& a : o.gamma_) add(a);
  for (const auto& a : o.padic_) add(a);
}

LFactorDescriptor LFactorDescriptor::shifted(const ExactReal& t) const {
  LFactorDescriptor out(field_);
  for (auto a : gamma_) {
    a.shift += t.value();
    out.gamma_.push_back(a);
  }
  for (auto a : padic_) {
    a.decay += ExactReal(a.period) * t;
    out.padic_.push_back(a);
  }
  return out;
}

std::string LFactorDescriptor::pretty() const {
  if (trivial()) return "1";
  std::vector<std::string> parts;
  for (const auto& a : gamma_)
    parts.push_back(std::string(a.kind == GammaKind::real ? "Γ_ℝ" : "Γ_ℂ") + "(s" + format_shift_term(a.shift) + ")");
  for (const auto& a : padic_) {
    std::string t = "(1-";
    if (a.turns.value() != 0.0) t += "e(" + format_real(a.turns.value()) + ")*";
    double c = (a.decay / ExactReal(a.period)).value();
    t += std::to_string(field_.q) + "^{-";
    if (a.period != 1) t += std::to_string(a.period);
    t += c == 0.0 ? "s" : "(s" + format_shift_term({c, 0.0}) + ")";
    t += "})^-1";
    parts.push_back(t);
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += parts[i];
  return out;
}

cplx ZPoint::z(int q) const {
  return std::exp(cplx(log_modulus.value() * std::log(static_cast<double>(q)), kTwoPi * turns.value()));
}

cplx ZPoint::s_representative(int q) const {
  double lq = std::log(static_cast<double>(q));
  return {-log_modulus.value(), -kTwoPi * turns.value() / lq};
}

LFactorDescriptor l_square_integrable_pair(const LocalField& field, const SquareIntegrableBlock& b1,
                                           const SquareIntegrableBlock& b2) {
  require_field(field, b1);
  require_field(field, b2);
  ExactReal t = ExactReal(twist(b1)) + ExactReal(twist(b2));
  return pair_atoms(field, with_twist(b1, 0.0), with_twist(b2, 0.0), t);
}

LFactorDescriptor l_induced_pair(const InducedDatum& d1, const InducedDatum& d2) {
  if (!(d1.field == d2.field)) throw std::invalid_argument("l_induced_pair: data over different fields");
  for (const auto* d : {&d1, &d2})
    for (const auto& b : d->blocks) require_field(d->field, square_integrable_part(b.unit));
  auto c1 = expand_constituents(d1);
  auto c2 = expand_constituents(d2);
  LFactorDescriptor out(d1.field);
  for (const auto& x : c1)
    for (const auto& y : c2) out.append(pair_atoms(d1.field, x.unit, y.unit, x.shift + y.shift));
  return out;
}

PoleSet pole_set(const LFactorDescriptor& l) {
  PoleSet out;
  out.q = l.field().q;
  for (const auto& a : l.gamma_atoms()) {
    ArchProgression p{-a.shift, a.kind == GammaKind::real ? 2 : 1, 1};
    auto it = std::find_if(out.progressions.begin(), out.progressions.end(), [&](const ArchProgression& e) {
      return e.step == p.step && std::abs(e.start - p.start) <= 1e-12;
    });
    if (it != out.progressions.end())
      ++it->multiplicity;
    else
      out.progressions.push_back(p);
  }
  for (const auto& a : l.padic_atoms()) {
    ExactReal lm = a.decay / ExactReal(a.period);
    for (int k = 0; k < a.period; ++k) {
      ZPoint p{lm, frac_part((ExactReal(k) - a.turns) / ExactReal(a.period)), 1};
      auto it = std::find_if(out.z_points.begin(), out.z_points.end(), [&](const ZPoint& e) {
        return approx_equal(e.log_modulus, p.log_modulus, 1e-12) && approx_equal(e.turns, p.turns, 1e-12);
      });
      if (it != out.z_points.end())
        ++it->multiplicity;
      else
        out.z_points.push_back(p);
    }
  }
  return out;
}

std::optional<ExactReal> rightmost_real_pole(const LFactorDescriptor& l) {
  std::optional<ExactReal> best;
  auto consider = [&](const ExactReal& x) {
    if (!best || compare(x, *best, 0.0) > 0) best = x;
  };
  for (const auto& a : l.gamma_atoms())
    if (std::fabs(a.shift.imag()) <= 1e-12) consider(ExactReal(-a.shift.real()));
  for (const auto& a : l.padic_atoms())
    if (a.turns.value() == 0.0) consider(-(a.decay / ExactReal(a.period)));
  return best;
}

double distance_to_pole(const LFactorDescriptor& l, cplx s) {
  double best = INFINITY;
  for (const auto& a : l.gamma_atoms()) {
    cplx u = s + a.shift;
    const double step = a.kind == GammaKind::real ? 2.0 : 1.0;
    double m = std::max(0.0, std::round(-u.real() / step));
    best = std::min(best, std::abs(u + step * m));
  }
  if (!l.padic_atoms().empty()) {
    const double lq = std::log(static_cast<double>(l.field().q));
    for (const auto& a : l.padic_atoms()) {
      const double period = kTwoPi / (a.period * lq);
      double dr = s.real() + a.decay.value() / a.period;
      double y = s.imag() - kTwoPi * a.turns.value() / (a.period * lq);
      y -= period * std::round(y / period);
      best = std::min(best, std::hypot(dr, y));
    }
  }
  return best;
}

cplx evaluate_lfactor(const LFactorDescriptor& l, cplx s, double pole_tolerance) {
  double d = distance_to_pole(l, s);
  if (d < pole_tolerance) {
    std::ostringstream os;
    os << "evaluation point lies within " << d << " of a pole";
    throw PoleProximityError(os.str(), d);
  }
  cplx v = 1.0;
  for (const auto& a : l.gamma_atoms()) v *= a.kind == GammaKind::real ? gamma_R(s + a.shift) : gamma_C(s + a.shift);
  if (!l.padic_atoms().empty()) {
    const int q = l.field().q;
    const cplx z = std::exp(-s * std::log(static_cast<double>(q)));
    for (const auto& a : l.padic_atoms()) v /= 1.0 - a.inverse_root(q) * std::pow(z, a.period);
  }
  return v;
}

cplx evaluate_inverse_lfactor(const LFactorDescriptor& l, cplx s) {
  cplx v = 1.0;
  for (const auto& a : l.gamma_atoms())
    v *= a.kind == GammaKind::real ? reciprocal_gamma_R(s + a.shift) : reciprocal_gamma_C(s + a.shift);
  if (!l.padic_atoms().empty()) {
    const int q = l.field().q;
    const cplx z = std::exp(-s * std::log(static_cast<double>(q)));
    for (const auto& a : l.padic_atoms()) v *= 1.0 - a.inverse_root(q) * std::pow(z, a.period);
  }
  return v;
}

bool same_atoms(const LFactorDescriptor& a, const LFactorDescriptor& b, double tol) {
  if (!(a.field() == b.field())) return false;
  if (a.gamma_atoms().size() != b.gamma_atoms().size() || a.padic_atoms().size() != b.padic_atoms().size()) return false;
  auto gkey = [](const GammaAtom& g) { return std::make_tuple(static_cast<int>(g.kind), g.shift.real(), g.shift.imag()); };
  auto pkey = [](const PAdicAtom& p) { return std::make_tuple(p.period, p.decay.value(), p.turns.value()); };
  auto ga = a.gamma_atoms(), gb = b.gamma_atoms();
  auto pa = a.padic_atoms(), pb = b.padic_atoms();
  std::sort(ga.begin(), ga.end(), [&](auto& x, auto& y) { return gkey(x) < gkey(y); });
  std::sort(gb.begin(), gb.end(), [&](auto& x, auto& y) { return gkey(x) < gkey(y); });
  std::sort(pa.begin(), pa.end(), [&](auto& x, auto& y) { return pkey(x) < pkey(y); });
  std::sort(pb.begin(), pb.end(), [&](auto& x, auto& y) { return pkey(x) < pkey(y); });
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i].kind != gb[i].kind || std::abs(ga[i].shift - gb[i].shift) > tol) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i].period != pb[i].period || !approx_equal(pa[i].decay, pb[i].decay, tol) ||
        !approx_equal(pa[i].turns, pb[i].turns, tol))
      return false;
  return true;
}

}  // namespace locnorm
