#include <locnorm/normalization.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rng.hpp"

namespace locnorm {

namespace {

std::string format_point(std::span<const cplx> s) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i].real() << (s[i].imag() < 0 ? "" : "+") << s[i].imag() << "i";
  os << ")";
  return os.str();
}

double relative_error(cplx a, cplx b) {
  double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

void check_rank(std::span<const cplx> s, int rank) {
  if (static_cast<int>(s.size()) != rank) throw std::invalid_argument("parameter vector length differs from Levi rank");
}

}  // namespace

cplx PairFactor::evaluate(cplx w) const {
  return evaluate_lfactor(l, w) * evaluate_inverse_lfactor(l, 1.0 + w) / evaluate_epsilon(eps, w);
}

cplx PairFactor::evaluate_centered(cplx w) const {
  return evaluate_lfactor(l, w) * evaluate_inverse_lfactor(l, 1.0 + w) / evaluate_epsilon(eps, 0.0);
}

cplx PairFactor::epsilon_ratio(cplx w) const { return evaluate_epsilon(eps, 0.0) / evaluate_epsilon(eps, w); }

double PairFactor::distance_to_singularity(cplx w) const {
  return std::min(distance_to_pole(l, w), distance_to_pole(l, 1.0 + w));
}

cplx NormalizingFactor::evaluate(std::span<const cplx> s) const {
  check_rank(s, rank);
  cplx v = 1.0;
  for (const auto& f : factors) v *= f.evaluate(s[f.pair.i] - s[f.pair.j]);
  return v;
}

cplx NormalizingFactor::evaluate_centered(std::span<const cplx> s) const {
  check_rank(s, rank);
  cplx v = 1.0;
  for (const auto& f : factors) v *= f.evaluate_centered(s[f.pair.i] - s[f.pair.j]);
  return v;
}

double NormalizingFactor::distance_to_singularity(std::span<const cplx> s) const {
  check_rank(s, rank);
  double d = INFINITY;
  for (const auto& f : factors) d = std::min(d, f.distance_to_singularity(s[f.pair.i] - s[f.pair.j]));
  return d;
}

bool MonomialRatio::constant() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const auto& e) { return e.second == 0; });
}

cplx MonomialRatio::evaluate(std::span<const cplx> s) const {
  cplx x = 0.0;
  for (const auto& [p, f] : exponents) x += (s[p.i] - s[p.j]) * static_cast<double>(f);
  if (x == 0.0) return 1.0;
  return std::exp(x * std::log(static_cast<double>(q)));
}

PairFactor rank_one_normalizer(const InducedDatum& a, const InducedDatum& b, const ConductorModel& model) {
  InducedDatum bd = contragredient(b);
  return PairFactor{{0, 1}, l_induced_pair(a, bd), pair_epsilon(a, bd, model)};
}

PairFactor rank_one_normalizer(const LocalField& field, const Block& a, const Block& b, const ConductorModel& model) {
  return rank_one_normalizer(InducedDatum{field, {a}, Flavor::generic, false},
                             InducedDatum{field, {b}, Flavor::generic, false}, model);
}

NormalizingFactor normalizing_factor(const ParabolicChart& from, const ParabolicChart& to, const LeviDatum& pi,
                                     const ConductorModel& model) {
  NormalizingFactor nf;
  nf.field = pi.field;
  nf.rank = from.rank();
  nf.crossed = crossed_pairs(from, to);
  if (static_cast<int>(pi.components.size()) != nf.rank)
    throw IncompatibleCharts("datum has " + std::to_string(pi.components.size()) + " Levi factors, charts have " +
                             std::to_string(nf.rank));
  for (int i = 0; i < nf.rank; ++i) {
    if (degree(pi.components[i]) != from.levi().parts()[i])
      throw IncompatibleCharts("Levi factor " + std::to_string(i + 1) + " has degree " +
                               std::to_string(degree(pi.components[i])) + ", chart expects " +
                               std::to_string(from.levi().parts()[i]));
    if (!(pi.components[i].field == pi.field)) throw std::invalid_argument("Levi factors over different fields");
  }
  for (const auto& p : nf.crossed) {
    auto f = rank_one_normalizer(pi.components[p.i], pi.components[p.j], model);
    f.pair = p;
    nf.factors.push_back(std::move(f));
  }
  return nf;
}

NormalizingFactor normalizing_factor(const ParabolicChart& from, const ParabolicChart& to, const InducedDatum& pi,
                                     const ConductorModel& model) {
  return normalizing_factor(from, to, as_levi(pi), model);
}

MonomialRatio epsilon_centering_ratio(const NormalizingFactor& nf) {
  MonomialRatio m;
  m.q = nf.field.q;
  if (nf.field.archimedean()) return m;
  for (const auto& f : nf.factors) m.exponents.push_back({f.pair, f.conductor()});
  return m;
}

CheckReport plancherel_check(const InducedDatum& pi1, const InducedDatum& pi2, std::span<const double> imag_parts,
                             double tol, const ConductorModel& model, double pole_margin) {
  CheckReport rep;
  rep.property = "plancherel measure against centred normalization";
  if (pi1.field.archimedean() || !(pi1.field == pi2.field))
    throw std::invalid_argument("plancherel_check needs a pair over one nonarchimedean field");
  for (const auto* d : {&pi1, &pi2}) {
    if (d->flavor != Flavor::tempered) throw InvariantViolation("plancherel_check needs tempered data");
    require_valid(*d);
  }
  const auto f = rank_one_normalizer(pi1, pi2, model);
  const auto ldual = l_induced_pair(contragredient(pi1), pi2);
  const double q = pi1.field.q;
  const cplx qf = std::pow(q, static_cast<double>(f.conductor()));
  const cplx eps0 = evaluate_epsilon(f.eps, 0.0);
  auto rdot = [&](cplx s) { return evaluate_lfactor(f.l, s) * evaluate_inverse_lfactor(f.l, 1.0 + s) / eps0; };
  for (double u : imag_parts) {
    const cplx s(0.0, u);
    double d = std::min({distance_to_pole(f.l, s), distance_to_pole(f.l, -std::conj(s)), distance_to_pole(ldual, -s)});
    if (d < pole_margin) {
      ++rep.skipped;
      continue;
    }
    cplx mu = qf * evaluate_lfactor(f.l, 1.0 + s) * evaluate_inverse_lfactor(f.l, s) *
              evaluate_lfactor(ldual, 1.0 - s) * evaluate_inverse_lfactor(ldual, -s);
    cplx prod = mu * std::conj(rdot(-std::conj(s))) * rdot(s);
    double err = std::abs(prod - 1.0);
    if (err > rep.max_error) {
      rep.max_error = err;
      rep.witnesses = {"worst sample s = " + format_point(std::span<const cplx>(&s, 1))};
    }
    ++rep.samples_used;
  }
  rep.passed = rep.samples_used > 0 && rep.max_error < tol;
  if (rep.skipped) rep.notes.push_back(std::to_string(rep.skipped) + " samples skipped near poles");
  return rep;
}

ExponentSplit split_exponents(const LeviDatum& pi) {
  std::vector<int> mult;
  LeviDatum flat{pi.field, {}};
  std::vector<ExactReal> exps;
  for (const auto& c : pi.components) {
    mult.push_back(static_cast<int>(c.blocks.size()));
    auto s = canonical_shifts(c);
    for (std::size_t a = 0; a < c.blocks.size(); ++a) {
      const auto& u = c.blocks[a].unit;
      Unit bare;
      if (const auto* sp = std::get_if<SpehBlock>(&u))
        bare = SpehBlock{with_twist(sp->delta, 0.0), sp->k};
      else
        bare = with_twist(std::get<SquareIntegrableBlock>(u), 0.0);
      Flavor fl = std::holds_alternative<SpehBlock>(bare) ? Flavor::discrete_local : Flavor::tempered;
      flat.components.push_back(InducedDatum{pi.field, {Block{bare, 0.0}}, fl, false});
      exps.push_back(s[a]);
    }
  }
  return {std::move(flat), Flattening(mult), std::move(exps)};
}

CheckReport induction_stages_check(const LeviDatum& pi, const ParabolicChart& from, const ParabolicChart& to,
                                   const std::vector<std::vector<cplx>>& samples, double tol,
                                   const ConductorModel& model, double pole_margin) {
  CheckReport rep;
  rep.property = "induction in stages for normalizing factors";
  const auto coarse = normalizing_factor(from, to, pi, model);
  auto split = split_exponents(pi);
  std::vector<int> parts;
  for (const auto& c : split.flat.components) parts.push_back(degree(c));
  Composition refined(parts);
  const auto fine = normalizing_factor(lift_chart(from, split.map, refined), lift_chart(to, split.map, refined),
                                       split.flat, model);
  for (const auto& s : samples) {
    auto s2 = split.map.embed(std::span<const cplx>(s));
    for (std::size_t l = 0; l < s2.size(); ++l) s2[l] += split.exponents[l].value();
    if (coarse.distance_to_singularity(s) < pole_margin || fine.distance_to_singularity(s2) < pole_margin) {
      ++rep.skipped;
      continue;
    }
    double err = relative_error(coarse.evaluate(s), fine.evaluate(s2));
    if (err > rep.max_error) {
      rep.max_error = err;
      rep.witnesses = {"worst sample s = " + format_point(s)};
    }
    ++rep.samples_used;
  }
  rep.passed = rep.samples_used > 0 && rep.max_error < tol;
  if (rep.skipped) rep.notes.push_back(std::to_string(rep.skipped) + " samples skipped near poles");
  return rep;
}

HolomorphyVerdict holomorphy_region(const LeviDatum& pi, int n) {
  const int deg = degree(pi);
  if (n == 0) n = deg;
  if (n < deg) throw std::invalid_argument("holomorphy_region: n is smaller than the degree of the datum");
  HolomorphyVerdict v;
  v.n = n;
  for (const auto& c : pi.components)
    for (const auto& s : canonical_shifts(c)) {
      ExactReal a = s.value() < 0 ? -s : s;
      if (compare(a, v.max_exponent, 0.0) > 0) v.max_exponent = a;
    }
  v.guaranteed_margin = ExactReal(1) - ExactReal(2) * v.max_exponent;
  v.required_margin = ExactReal(Rational(2, 1 + static_cast<std::int64_t>(n) * n));
  // Strict: at equality the open region is not certified.
  v.certified = compare(v.guaranteed_margin, v.required_margin, 0.0) > 0;
  return v;
}

HolomorphyVerdict holomorphy_region(const InducedDatum& pi, int n) {
  return holomorphy_region(LeviDatum{pi.field, {pi}}, n);
}

std::vector<std::vector<cplx>> random_samples(int rank, int count, std::uint64_t seed, double re_half_width,
                                              double im_half_width) {
  detail::Rng rng(seed);
  std::vector<std::vector<cplx>> out(count, std::vector<cplx>(rank));
  for (auto& s : out)
    for (auto& x : s) x = {rng.uniform(-re_half_width, re_half_width), rng.uniform(-im_half_width, im_half_width)};
  return out;
}

}  // namespace locnorm
