#include <locnorm/local_reps.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace locnorm {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

LocalField LocalField::nonarch(int q, int c_psi) {
  if (q < 2) throw std::invalid_argument("residue field size q must be at least 2");
  return {FieldKind::nonarch, q, c_psi};
}

std::string to_string(const LocalField& f) {
  switch (f.kind) {
    case FieldKind::real: return "R";
    case FieldKind::complex: return "C";
    case FieldKind::nonarch: return "nonarch(q=" + std::to_string(f.q) + ")";
  }
  return "?";
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::generic: return "generic";
    case Flavor::discrete_local: return "discrete_local";
    case Flavor::tempered: return "tempered";
  }
  return "?";
}

std::string SupercuspidalStandIn::dual_class_id() const {
  if (self_dual) return class_id;
  if (!class_id.empty() && class_id.back() == '~') return class_id.substr(0, class_id.size() - 1);
  return class_id + "~";
}

SupercuspidalStandIn SupercuspidalStandIn::dual() const {
  SupercuspidalStandIn d = *this;
  d.class_id = dual_class_id();
  d.twist = -twist;
  return d;
}

bool SupercuspidalStandIn::same_twist_class(const SupercuspidalStandIn& o) const {
  return degree == o.degree && twist_order == o.twist_order && conductor == o.conductor &&
         class_id == o.class_id && self_dual == o.self_dual;
}

LeviDatum as_levi(const InducedDatum& d) {
  LeviDatum out{d.field, {}};
  for (const auto& b : d.blocks) {
    InducedDatum c{d.field, {b}, d.flavor, false};
    if (std::holds_alternative<SpehBlock>(b.unit)) c.flavor = Flavor::discrete_local;
    out.components.push_back(std::move(c));
  }
  return out;
}

int degree(const SquareIntegrableBlock& b) {
  return std::visit(overloaded{[](const RealDS&) { return 2; }, [](const RealChar&) { return 1; },
                               [](const ComplexChar&) { return 1; },
                               [](const Segment& s) { return s.length * s.cusp.degree; }},
                    b);
}

int degree(const Unit& u) {
  return std::visit(overloaded{[](const SquareIntegrableBlock& b) { return degree(b); },
                               [](const SpehBlock& s) { return s.k * degree(s.delta); }},
                    u);
}

int degree(const InducedDatum& d) {
  int n = 0;
  for (const auto& b : d.blocks) n += degree(b.unit);
  return n;
}

int degree(const LeviDatum& d) {
  int n = 0;
  for (const auto& c : d.components) n += degree(c);
  return n;
}

double twist(const SquareIntegrableBlock& b) {
  return std::visit(overloaded{[](const RealDS& x) { return x.twist; }, [](const RealChar& x) { return x.twist; },
                               [](const ComplexChar& x) { return x.twist; },
                               [](const Segment& s) { return s.cusp.twist; }},
                    b);
}

SquareIntegrableBlock with_twist(const SquareIntegrableBlock& b, double t) {
  SquareIntegrableBlock out = b;
  std::visit(overloaded{[t](RealDS& x) { x.twist = t; }, [t](RealChar& x) { x.twist = t; },
                        [t](ComplexChar& x) { x.twist = t; }, [t](Segment& s) { s.cusp.twist = t; }},
             out);
  return out;
}

const SquareIntegrableBlock& square_integrable_part(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return s->delta;
  return std::get<SquareIntegrableBlock>(u);
}

int speh_k(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return s->k;
  return 1;
}

SquareIntegrableBlock dual(const SquareIntegrableBlock& b) {
  return std::visit(
      overloaded{[](const RealDS& x) -> SquareIntegrableBlock { return RealDS{x.k, -x.twist}; },
                 [](const RealChar& x) -> SquareIntegrableBlock { return RealChar{x.eps, -x.twist}; },
                 [](const ComplexChar& x) -> SquareIntegrableBlock { return ComplexChar{-x.r, -x.twist}; },
                 [](const Segment& s) -> SquareIntegrableBlock { return Segment{s.length, s.cusp.dual()}; }},
      b);
}

Unit dual(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return SpehBlock{dual(s->delta), s->k};
  return dual(std::get<SquareIntegrableBlock>(u));
}

bool legal_for(const LocalField& f, const SquareIntegrableBlock& b) {
  return std::visit(overloaded{[&](const RealDS& x) { return f.kind == FieldKind::real && x.k != 0; },
                               [&](const RealChar& x) {
                                 return f.kind == FieldKind::real && (x.eps == 0 || x.eps == 1);
                               },
                               [&](const ComplexChar&) { return f.kind == FieldKind::complex; },
                               [&](const Segment& s) {
                                 const auto& c = s.cusp;
                                 return f.kind == FieldKind::nonarch && s.length >= 1 && c.degree >= 1 &&
                                        c.twist_order >= 1 && c.degree % c.twist_order == 0 && c.conductor >= 0;
                               }},
                    b);
}

std::string describe(const SquareIntegrableBlock& b) {
  std::ostringstream os;
  std::visit(overloaded{[&](const RealDS& x) { os << "D_" << x.k; }, [&](const RealChar& x) { os << "sgn^" << x.eps; },
                        [&](const ComplexChar& x) { os << "chi_" << x.r; },
                        [&](const Segment& s) {
                          os << "Delta(" << s.length << "," << s.cusp.class_id << "/GL" << s.cusp.degree << ")";
                        }},
             b);
  if (double t = twist(b); t != 0.0) os << "[" << t << "]";
  return os.str();
}

std::string describe(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return "J(" + describe(s->delta) + "," + std::to_string(s->k) + ")";
  return describe(std::get<SquareIntegrableBlock>(u));
}

namespace {

Unit strip_twist(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return SpehBlock{with_twist(s->delta, 0.0), s->k};
  return with_twist(std::get<SquareIntegrableBlock>(u), 0.0);
}

ExactReal folded_shift(const Block& b) {
  return ExactReal(b.shift) + ExactReal(twist(square_integrable_part(b.unit)));
}

// Orders by the folded exponent shift + twist, so blocks whose twist carries
// part of the exponent stay where canonicalize would put them.
void stable_sort_decreasing(std::vector<Block>& blocks) {
  auto folded = [](const Block& b) { return ExactReal(b.shift) + ExactReal(twist(square_integrable_part(b.unit))); };
  std::stable_sort(blocks.begin(), blocks.end(),
                   [&](const Block& x, const Block& y) { return compare(folded(x), folded(y), 0.0) > 0; });
}

// |s| < bound(n); for n = 1 the bound is 0 and only s = 0 is admitted.
bool lt_bound(const ExactReal& x, int n) {
  if (n == 1) return x.value() == 0.0;
  return compare(ExactReal(lrs_bound_exact(n)), x, 0.0) > 0;
}

}  // namespace

std::vector<ExactReal> canonical_shifts(const InducedDatum& d) {
  std::vector<ExactReal> out;
  out.reserve(d.blocks.size());
  for (const auto& b : d.blocks) out.push_back(folded_shift(b));
  return out;
}

InducedDatum canonicalize(const InducedDatum& d) {
  InducedDatum out = d;
  for (auto& b : out.blocks) {
    b.shift = folded_shift(b).value();
    b.unit = strip_twist(b.unit);
  }
  stable_sort_decreasing(out.blocks);
  return out;
}

std::vector<std::string> invariant_violations(const InducedDatum& d) {
  std::vector<std::string> v;
  auto label = [](std::size_t i) { return "block " + std::to_string(i + 1) + ": "; };
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& u = d.blocks[i].unit;
    if (!legal_for(d.field, square_integrable_part(u)))
      v.push_back(label(i) + describe(u) + " is not a legal block over " + to_string(d.field));
    if (speh_k(u) < 1) v.push_back(label(i) + "Speh k must be at least 1");
  }
  if (d.blocks.empty()) v.push_back("datum has no blocks");
  auto s = canonical_shifts(d);
  bool all_square_integrable = std::all_of(d.blocks.begin(), d.blocks.end(), [](const Block& b) {
    return std::holds_alternative<SquareIntegrableBlock>(b.unit);
  });
  auto decreasing = [&] {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (compare(s[i - 1], s[i], 0.0) < 0) {
        v.push_back(label(i) + "shifts are not weakly decreasing");
        return;
      }
  };
  switch (d.flavor) {
    case Flavor::tempered:
      if (!all_square_integrable) v.push_back("tempered datum must consist of square-integrable blocks");
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].value() != 0.0) v.push_back(label(i) + "tempered datum has a nonzero real exponent");
      break;
    case Flavor::generic: {
      if (!all_square_integrable) v.push_back("generic datum must consist of square-integrable blocks");
      decreasing();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (compare(ExactReal(Rational(1, 2)), ExactReal(std::fabs(s[i].value())), 0.0) <= 0)
          v.push_back(label(i) + "generic exponent must satisfy |s| < 1/2");
      if (!check_hermitian_symmetry(d).symmetric) v.push_back("generic datum is not hermitian symmetric");
      break;
    }
    case Flavor::discrete_local: {
      int n = degree(d);
      std::optional<int> k0;
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto* sp = std::get_if<SpehBlock>(&d.blocks[i].unit);
        if (!sp) {
          v.push_back(label(i) + "discrete datum must consist of Speh blocks");
          continue;
        }
        if (!k0) k0 = sp->k;
        if (!d.mixed_k && sp->k != *k0) v.push_back(label(i) + "Speh blocks do not share a common k");
      }
      decreasing();
      for (std::size_t i = 0; i < s.size(); ++i) {
        ExactReal a = s[i].value() < 0 ? -s[i] : s[i];
        if (!lt_bound(a, n))
          v.push_back(label(i) + "exponent " + s[i].str() + " violates |s| < " + lrs_bound_exact(n).str());
      }
      break;
    }
  }
  return v;
}

void require_valid(const InducedDatum& d) {
  auto v = invariant_violations(d);
  if (v.empty()) return;
  std::string msg = "invalid " + to_string(d.flavor) + " datum";
  for (const auto& x : v) msg += "; " + x;
  throw InvariantViolation(msg);
}

InducedDatum contragredient(const InducedDatum& d) {
  InducedDatum out = d;
  for (auto& b : out.blocks) {
    b.unit = dual(b.unit);
    b.shift = -b.shift;
  }
  stable_sort_decreasing(out.blocks);
  return out;
}

LeviDatum contragredient(const LeviDatum& d) {
  LeviDatum out = d;
  for (auto& c : out.components) c = contragredient(c);
  return out;
}

HermitianCheck check_hermitian_symmetry(const InducedDatum& d, double tol) {
  std::vector<Unit> units;
  std::vector<ExactReal> shifts = canonical_shifts(d);
  for (const auto& b : d.blocks) units.push_back(strip_twist(b.unit));
  const std::size_t r = units.size();
  HermitianCheck out;
  out.partner.assign(r, -1);
  std::vector<bool> used(r, false);
  for (std::size_t j = 0; j < r; ++j) {
    if (out.partner[j] >= 0) continue;
    for (std::size_t k = 0; k < r; ++k) {
      if (used[k]) continue;
      if (!(units[j] == units[k]) || !approx_equal(shifts[j], -shifts[k], tol)) continue;
      if (k == j) {
        out.partner[j] = static_cast<int>(j);
        used[j] = true;
      } else {
        out.partner[j] = static_cast<int>(k);
        out.partner[k] = static_cast<int>(j);
        used[j] = used[k] = true;
      }
      break;
    }
    if (out.partner[j] < 0) {
      out.partner.clear();
      return out;
    }
  }
  out.symmetric = true;
  return out;
}

Rational lrs_bound_exact(int n) {
  if (n < 1) throw std::invalid_argument("lrs_bound: n must be positive");
  std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  return Rational(n2 - 1, 2 * (n2 + 1));
}

double lrs_bound(int n) { return lrs_bound_exact(n).to_double(); }

std::vector<double> residual_parameters(int k, std::span<const double> s) {
  if (k < 1) throw std::invalid_argument("residual_parameters: k must be at least 1");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] < s[i]) throw std::invalid_argument("residual_parameters: input shifts are not weakly decreasing");
  std::vector<double> out;
  out.reserve(s.size() * k);
  for (int l = 0; l < k; ++l) {
    ExactReal level(Rational(k - 1 - 2 * l, 2));
    for (double x : s) out.push_back((level + ExactReal(x)).value());
  }
  return out;
}

SpehTriple speh_triple(const SpehBlock& b, double shift) {
  double c = shift + twist(b.delta);
  double h = 0.5 * (b.k - 1);
  return {with_twist(b.delta, 0.0), c - h, c + h};
}

namespace {

bool same_inertial_class(const SquareIntegrableBlock& x, const SquareIntegrableBlock& y) {
  if (x.index() != y.index()) return false;
  if (const auto* sx = std::get_if<Segment>(&x)) return sx->cusp.same_twist_class(std::get<Segment>(y).cusp);
  return with_twist(x, 0.0) == with_twist(y, 0.0);
}

bool near_integer(double x, double tol) { return std::fabs(x - std::round(x)) <= tol; }

}  // namespace

bool linked_segments(const SpehTriple& x, const SpehTriple& y, double tol) {
  if (!same_inertial_class(x.delta, y.delta)) return false;
  if (!near_integer(x.a - y.a, tol)) return false;
  bool x_in_y = y.a <= x.a + tol && x.b <= y.b + tol;
  bool y_in_x = x.a <= y.a + tol && y.b <= x.b + tol;
  if (x_in_y || y_in_x) return false;
  return std::max(x.a, y.a) <= std::min(x.b, y.b) + 1 + tol;
}

bool linked_ends_separated(const SpehTriple& x, const SpehTriple& y, double tol) {
  const SpehTriple& hi = (x.a + x.b >= y.a + y.b) ? x : y;
  const SpehTriple& lo = (&hi == &x) ? y : x;
  return hi.a >= lo.a + 1 - tol && hi.b >= lo.b + 1 - tol;
}

InducedDatum residual_local_component(int k, const InducedDatum& cuspidal) {
  if (k < 1) throw std::invalid_argument("residual_local_component: k must be at least 1");
  InducedDatum c = canonicalize(cuspidal);
  const int n = k * degree(c);
  InducedDatum out{c.field, {}, Flavor::discrete_local, false};
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    const auto* sq = std::get_if<SquareIntegrableBlock>(&c.blocks[i].unit);
    if (!sq) throw InvariantViolation("block " + std::to_string(i + 1) + " is already a Speh block");
    ExactReal s(c.blocks[i].shift);
    ExactReal a = s.value() < 0 ? -s : s;
    if (!lt_bound(a, n))
      throw InvariantViolation("block " + std::to_string(i + 1) + " (" + describe(*sq) + ") has exponent " + s.str() +
                               " outside |s| < " + lrs_bound_exact(n).str() + " for GL_" + std::to_string(n));
    out.blocks.push_back({SpehBlock{*sq, k}, c.blocks[i].shift});
  }
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j) {
      auto ti = speh_triple(std::get<SpehBlock>(out.blocks[i].unit), out.blocks[i].shift);
      auto tj = speh_triple(std::get<SpehBlock>(out.blocks[j].unit), out.blocks[j].shift);
      if (linked_segments(ti, tj))
        throw InvariantViolation("blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are linked");
    }
  return out;
}

std::vector<Constituent> expand_constituents(const InducedDatum& d) {
  std::vector<Constituent> out;
  for (const auto& b : d.blocks) {
    ExactReal s = folded_shift(b);
    const auto& delta = square_integrable_part(b.unit);
    const int k = speh_k(b.unit);
    for (int l = 0; l < k; ++l) out.push_back({with_twist(delta, 0.0), s + ExactReal(Rational(k - 1 - 2 * l, 2))});
  }
  return out;
}

}  // namespace locnorm
