#include <locnorm/eps_conductor.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace locnorm {

cplx EpsilonFactor::evaluate(cplx s) const {
  if (field.archimedean()) return root_number;
  return root_number * std::exp((0.5 - s) * static_cast<double>(total_conductor()) * std::log(static_cast<double>(field.q)));
}

cplx EpsilonFactor::ratio_to_center(cplx s) const {
  if (field.archimedean()) return 1.0;
  return std::exp(s * static_cast<double>(total_conductor()) * std::log(static_cast<double>(field.q)));
}

EpsilonFactor EpsilonFactor::dual() const {
  EpsilonFactor d = *this;
  d.root_number = std::conj(root_number);
  return d;
}

EpsilonFactor epsilon_factor(const LocalField& field, int f, cplx root_number, int c_psi, int n1, int n2) {
  if (std::fabs(std::abs(root_number) - 1.0) > 1e-12) throw std::invalid_argument("root number must have modulus 1");
  if (f < 0) throw std::invalid_argument("conductor exponent must be nonnegative");
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("degrees must be positive");
  if (field.archimedean()) return EpsilonFactor{field, root_number, 0, 0};
  return EpsilonFactor{field, root_number, f, n1 * n2 * c_psi};
}

ConductorInterval conductor_bound_interval(int n1, int f1, int n2, int f2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("degrees must be positive");
  if (f1 < 0 || f2 < 0) throw std::invalid_argument("conductors must be nonnegative");
  ConductorInterval c;
  c.hi = n1 * f1 + n2 * f2 - std::min(f1, f2);
  // pi1 (x) chi and pi2 (x) chi^{-1} unramified forces f_i = n_i f(chi).
  c.zero_permissible = f1 % n1 == 0 && f2 % n2 == 0 && f1 / n1 == f2 / n2;
  return c;
}

int conductor_additivity(std::span<const int> parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("conductors must be nonnegative");
    total += p;
  }
  return total;
}

int block_conductor(const SquareIntegrableBlock& b) {
  const auto* s = std::get_if<Segment>(&b);
  if (!s) return 0;
  if (s->cusp.conductor == 0 && s->cusp.degree == 1) return s->length - 1;
  return s->length * s->cusp.conductor;
}

int datum_conductor(const InducedDatum& d) {
  std::vector<int> parts;
  for (const auto& b : d.blocks) parts.push_back(speh_k(b.unit) * block_conductor(square_integrable_part(b.unit)));
  return conductor_additivity(parts);
}

int ConductorModel::pair_conductor(const SquareIntegrableBlock& a, const SquareIntegrableBlock& b) const {
  if (kind == Kind::zero || !std::holds_alternative<Segment>(a)) return 0;
  return conductor_bound_interval(degree(a), block_conductor(a), degree(b), block_conductor(b)).hi;
}

std::vector<EpsilonTerm> pair_epsilon(const InducedDatum& d1, const InducedDatum& d2, const ConductorModel& model) {
  if (!(d1.field == d2.field)) throw std::invalid_argument("pair_epsilon: data over different fields");
  std::vector<EpsilonTerm> out;
  auto c1 = expand_constituents(d1);
  auto c2 = expand_constituents(d2);
  for (const auto& x : c1)
    for (const auto& y : c2)
      out.push_back({epsilon_factor(d1.field, model.pair_conductor(x.unit, y.unit), model.root_number,
                                    d1.field.psi_conductor, degree(x.unit), degree(y.unit)),
                     x.shift + y.shift});
  return out;
}

cplx evaluate_epsilon(std::span<const EpsilonTerm> terms, cplx s) {
  cplx v = 1.0;
  for (const auto& t : terms) v *= t.evaluate(s);
  return v;
}

int total_conductor(std::span<const EpsilonTerm> terms) {
  int f = 0;
  for (const auto& t : terms) f += t.factor.total_conductor();
  return f;
}

}  // namespace locnorm
