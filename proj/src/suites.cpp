#include <locnorm/suites.hpp>

#include <locnorm/bounds.hpp>
#include <locnorm/combinatorics.hpp>
#include <locnorm/eps_conductor.hpp>
#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/normalization.hpp>

#include "rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace locnorm {
namespace {

using detail::Rng;

constexpr std::size_t kMaxWitnesses = 5;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + salt * 0xBF58476D1CE4E5B9ULL + i * 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

LocalField field_cycle(std::size_t i) {
  switch (i % 5) {
    case 0: return LocalField::real();
    case 1: return LocalField::complex();
    case 2: return LocalField::nonarch(2);
    case 3: return LocalField::nonarch(3);
    default: return LocalField::nonarch(5);
  }
}

LocalField nonarch_cycle(std::size_t i) {
  static const int qs[] = {2, 3, 5};
  return LocalField::nonarch(qs[i % 3]);
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void fail(SuiteResult& r, const std::string& witness) {
  ++r.failures;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(witness);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform_int(0, i)]);
  return p;
}

Composition levi_composition(const LeviDatum& pi) {
  std::vector<int> parts;
  for (const auto& c : pi.components) parts.push_back(degree(c));
  return Composition(parts);
}

double relative_error(cplx a, cplx b) {
  double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string describe_datum(const InducedDatum& d) { return to_json(d).dump(); }

// ---------------------------------------------------------------------------

void pole_location(SuiteResult& r, const SuiteOptions& o) {
  r.property = "rightmost real pole of L(pi x pi~) sits at twice the largest exponent";
  const int count = pick(o.count, 240);
  const int max_n = pick(o.max_n, 6);
  double arch_err = 0.0;
  std::size_t exact_cases = 0;
  for (int i = 0; i < count; ++i) {
    const auto field = field_cycle(i);
    const int n = 1 + (i / 5) % max_n;
    auto d = random_generic_datum(n, field, mix(o.seed, 1, i));
    ExactReal expected;
    for (const auto& s : canonical_shifts(d)) {
      ExactReal a = s.value() < 0 ? -s : s;
      if (compare(a, expected, 0.0) > 0) expected = a;
    }
    expected = ExactReal(2) * expected;
    auto got = rightmost_real_pole(l_induced_pair(d, contragredient(d)));
    ++r.cases;
    if (!got) {
      fail(r, "no real pole for " + describe_datum(d));
      continue;
    }
    if (field.archimedean()) {
      double err = std::fabs(got->value() - expected.value());
      arch_err = std::max(arch_err, err);
      if (!(err <= 1e-10)) fail(r, "pole " + got->str() + " expected " + expected.str() + " for " + describe_datum(d));
    } else {
      if (!got->is_exact() || !expected.is_exact() || *got->exact() != *expected.exact()) {
        fail(r, "pole " + got->str() + " expected " + expected.str() + " (exact) for " + describe_datum(d));
      } else {
        ++exact_cases;
      }
    }
  }
  r.max_error = arch_err;
  r.details["archimedean_max_error"] = arch_err;
  r.details["exact_nonarch_cases"] = exact_cases;
}

void normalization_comparison(SuiteResult& r, const SuiteOptions& o) {
  r.property = "normalizing factor equals the epsilon-ratio monomial times the centred factor";
  const int count = pick(o.count, 60);
  const int per = pick(o.samples, 50);
  const int max_n = std::max(2, pick(o.max_n, 6));
  std::size_t points = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(o.seed, 2, i));
    const auto field = field_cycle(i);
    const int n = static_cast<int>(rng.uniform_int(2, max_n));
    auto pi = random_levi_datum(n, field, rng.next());
    auto levi = levi_composition(pi);
    ParabolicChart from = ParabolicChart::standard(levi);
    ParabolicChart to(levi, random_permutation(levi.size(), rng));
    if (to == from) to = ParabolicChart::opposite(levi);
    auto nf = normalizing_factor(from, to, pi);
    auto mono = epsilon_centering_ratio(nf);
    if (field.archimedean() && !mono.constant()) fail(r, "archimedean monomial is not constant");
    auto pool = random_samples(levi.size(), per * 8, rng.next());
    int used = 0;
    double worst = 0.0;
    for (const auto& s : pool) {
      if (used == per) break;
      if (nf.distance_to_singularity(s) < 1e-4) {
        ++r.skipped;
        continue;
      }
      cplx full = nf.evaluate(s);
      cplx centred = nf.evaluate_centered(s);
      worst = std::max(worst, relative_error(full, mono.evaluate(s) * centred));
      ++used;
    }
    points += used;
    ++r.cases;
    r.max_error = std::max(r.max_error, worst);
    if (used < per) fail(r, "only " + std::to_string(used) + " regular samples for datum " + std::to_string(i));
    if (!(worst < 1e-10)) fail(r, "relative error " + num(worst) + " for datum " + std::to_string(i));
  }
  r.details["sample_points"] = points;
}

void plancherel(SuiteResult& r, const SuiteOptions& o) {
  r.property = "Plancherel measure times |centred normalizing factor|^2 is one on the unitary axis";
  const int count = pick(o.count, 60);
  const int per = pick(o.samples, 50);
  const int max_n = pick(o.max_n, 3);
  std::size_t used = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(o.seed, 3, i));
    const auto field = nonarch_cycle(i);
    auto p1 = random_tempered_datum(static_cast<int>(rng.uniform_int(1, max_n)), field, rng.next());
    auto p2 = i % 3 == 0 ? p1 : random_tempered_datum(static_cast<int>(rng.uniform_int(1, max_n)), field, rng.next());
    const double period = 2.0 * std::numbers::pi / std::log(static_cast<double>(field.q));
    std::vector<double> u(per);
    for (auto& x : u) x = rng.uniform(-period, period);
    auto rep = plancherel_check(p1, p2, u, 1e-9);
    ++r.cases;
    used += rep.samples_used;
    r.skipped += rep.skipped;
    r.max_error = std::max(r.max_error, rep.max_error);
    if (!rep.passed) fail(r, "error " + num(rep.max_error) + " for " + describe_datum(p1) + " x " + describe_datum(p2));
  }
  r.details["sample_points"] = used;
}

void induction_stages(SuiteResult& r, const SuiteOptions& o) {
  r.property = "normalizing factors are compatible with induction in stages";
  const int count = pick(o.count, 120);
  const int per = pick(o.samples, 25);
  const int max_n = std::max(2, pick(o.max_n, 6));
  std::size_t used = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(o.seed, 4, i));
    const auto field = field_cycle(i);
    auto pi = random_levi_datum(static_cast<int>(rng.uniform_int(2, max_n)), field, rng.next());
    auto levi = levi_composition(pi);
    ParabolicChart from(levi, random_permutation(levi.size(), rng));
    ParabolicChart to(levi, random_permutation(levi.size(), rng));
    auto rep = induction_stages_check(pi, from, to, random_samples(levi.size(), per, rng.next()), 1e-9);
    ++r.cases;
    used += rep.samples_used;
    r.skipped += rep.skipped;
    r.max_error = std::max(r.max_error, rep.max_error);
    if (!rep.passed) fail(r, "deviation " + num(rep.max_error) + " for datum " + std::to_string(i));
  }
  r.details["sample_points"] = used;
}

void holomorphy(SuiteResult& r, const SuiteOptions& o) {
  r.property = "holomorphy margin is certified below the exponent bound 1/2 - 1/(n^2+1) and refused at it";
  const int count = pick(o.count, 500);
  const int max_n = std::max(2, pick(o.max_n, 6));
  std::size_t accepted = 0, refused = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(o.seed, 5, i));
    const auto field = field_cycle(i);
    const int n = static_cast<int>(rng.uniform_int(2, max_n));
    auto d = random_discrete_datum(n, field, rng.next());
    ++r.cases;
    try {
      auto v = holomorphy_region(d);
      if (v.certified) ++accepted;
      else fail(r, "not certified (max exponent " + v.max_exponent.str() + "): " + describe_datum(d));
    } catch (const std::exception& e) {
      fail(r, std::string("exception: ") + e.what());
    }
    // Push one exponent to the bound itself, then past it.
    const Rational bound = lrs_bound_exact(n);
    for (int variant = 0; variant < 2; ++variant) {
      ExactReal target(bound);
      if (variant == 1) {
        auto extra = Rational::from_double(std::round(rng.uniform(0.0, 1.0) * 10000.0) / 10000.0).value();
        target = ExactReal(bound) + ExactReal(extra) * (ExactReal(Rational(1, 2)) - ExactReal(bound));
      }
      InducedDatum adv = d;
      auto& b = adv.blocks[rng.uniform_int(0, static_cast<long long>(adv.blocks.size()) - 1)];
      ExactReal t(twist(square_integrable_part(b.unit)));
      ExactReal signed_target = rng.coin() ? target : -target;
      b.shift = (signed_target - t).value();
      ++r.cases;
      try {
        auto v = holomorphy_region(adv);
        if (!v.certified) ++refused;
        else fail(r, "adversarial datum certified at exponent " + target.str() + ": " + describe_datum(adv));
      } catch (const std::exception& e) {
        fail(r, std::string("exception: ") + e.what());
      }
    }
  }
  r.details["certified"] = accepted;
  r.details["adversarial_refused"] = refused;
}

struct DiscSample {
  DiscRationalDescriptor f;
  int q;
  int n;
};

DiscSample random_disc_function(std::uint64_t seed) {
  static const int qs[] = {2, 3, 5};
  Rng rng(seed);
  DiscSample out;
  out.q = qs[rng.uniform_int(0, 2)];
  out.n = static_cast<int>(rng.uniform_int(2, 3));
  const double delta = delta_constant(out.q, out.n);
  auto& f = out.f;
  f.scale = std::polar(rng.uniform(0.3, 1.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
  f.m = static_cast<int>(rng.uniform_int(-2, 2));
  int blaschke = static_cast<int>(rng.uniform_int(0, 3));
  int bare = static_cast<int>(rng.uniform_int(0, 1));
  if (blaschke + bare == 0) blaschke = 1;
  for (int k = 0; k < blaschke; ++k) {
    // (z - zeta) / (1 - conj(zeta) z) is unimodular on |z| = 1.
    cplx zeta = std::polar(rng.uniform(0.05, 1.0 / (1.02 * delta)), rng.uniform(0.0, 2.0 * std::numbers::pi));
    f.scale *= -1.0 / std::conj(zeta);
    f.zeros.push_back({zeta, 1});
    f.poles.push_back({1.0 / std::conj(zeta), 1});
  }
  for (int k = 0; k < bare; ++k) {
    // (|rho| - 1) / (z - rho) has sup 1 on |z| = 1.
    cplx rho = std::polar(rng.uniform(1.02 * delta, 3.0 * delta), rng.uniform(0.0, 2.0 * std::numbers::pi));
    f.scale *= std::abs(rho) - 1.0;
    f.poles.push_back({rho, 1});
  }
  f.l = f.natural_l();
  f.bound_on_circle = 1.0;
  return out;
}

void annulus_bound(SuiteResult& r, const SuiteOptions& o) {
  r.property = "annulus certificate dominates the sampled sup";
  const int count = pick(o.count, 100);
  double tightest = INFINITY;
  for (int i = 0; i < count; ++i) {
    auto s = random_disc_function(mix(o.seed, 6, i));
    auto cert = annulus_certificate(s.f, s.q, s.n);
    auto res = sampling_oracle([&](cplx z) { return s.f.evaluate(z); }, annulus_region(cert, 2048, 64));
    ++r.cases;
    if (res.sup > 0.0) tightest = std::min(tightest, cert.bound / res.sup);
    r.max_error = std::max(r.max_error, res.sup / cert.bound);
    if (res.flagged) fail(r, "sampling hit a singularity for function " + std::to_string(i));
    if (res.sup > cert.bound) fail(r, "sup " + num(res.sup) + " exceeds bound " + num(cert.bound));
  }
  r.details["worst_sup_over_bound"] = r.max_error;
  r.details["tightest_bound_over_sup"] = std::isfinite(tightest) ? json(tightest) : json(nullptr);
}

cplx log_derivative(const StripRational& f, cplx s) {
  cplx acc = 0.0;
  for (const auto& z : f.zeros) acc += static_cast<double>(z.multiplicity) / (s - z.value);
  for (const auto& p : f.poles) acc -= static_cast<double>(p.multiplicity) / (s - p.value);
  return acc;
}

void strip_bound(SuiteResult& r, const SuiteOptions& o) {
  r.property = "strip certificate and its Cauchy derivative estimate dominate the sampled sup";
  const int count = pick(o.count, 100);
  std::size_t derivative_cases = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(o.seed, 7, i));
    StripRational f;
    std::vector<cplx> progs;
    double im_max = 0.0;
    while (f.poles.empty()) {
      f = StripRational{};
      progs.clear();
      f.scale = std::polar(rng.uniform(0.3, 1.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const int nprog = static_cast<int>(rng.uniform_int(1, 3));
      for (int k = 0; k < nprog; ++k) {
        cplx rho(std::round(rng.uniform(-1.5, 2.5) * 1000.0) / 1000.0, std::round(rng.uniform(-3.0, 3.0) * 1000.0) / 1000.0);
        progs.push_back(rho);
        im_max = std::max(im_max, std::fabs(rho.imag()));
        for (int j = 0; j <= 3; ++j) {
          cplx p = rho - static_cast<double>(j);
          if (std::fabs(p.real()) < 0.05 || !rng.coin()) continue;
          // (s + conj p) / (s - p) is unimodular on the imaginary axis.
          f.multiply_factor(-std::conj(p), p);
        }
      }
    }
    auto d = describe_strip_function(f, progs, 1.0);
    auto eval = [&](cplx s) { return f.evaluate(s); };
    for (double frac : {0.5, 0.25}) {
      auto cert = strip_certificate(d, frac * d.delta);
      auto res = sampling_oracle(eval, strip_region(cert, im_max + 6.0, 256, 256));
      ++r.cases;
      r.max_error = std::max(r.max_error, res.sup / cert.bound);
      if (res.flagged) fail(r, "sampling hit a singularity for function " + std::to_string(i));
      if (res.sup > cert.bound)
        fail(r, "function " + std::to_string(i) + ": sup " + num(res.sup) + " exceeds bound " + num(cert.bound));
      if (frac == 0.5) {
        auto dcert = cauchy_derivative_certificate(cert, 1, cert.outer / 2.0);
        auto dres = sampling_oracle([&](cplx s) { return f.evaluate(s) * log_derivative(f, s); },
                                    strip_region(dcert, im_max + 6.0, 64, 64));
        ++r.cases;
        ++derivative_cases;
        if (dres.flagged || dres.sup > dcert.bound)
          fail(r, "function " + std::to_string(i) + ": derivative sup " + num(dres.sup) + " exceeds " +
                      num(dcert.bound));
      }
    }
  }
  // Closed form: (s + 0.3)/(s - 0.3) with eps = 0.1.
  StripRational g;
  g.zeros = {{cplx(-0.3, 0.0), 1}};
  g.poles = {{cplx(0.3, 0.0), 1}};
  auto dg = describe_strip_function(g, {cplx(0.3, 0.0)}, 1.0);
  auto cg = strip_certificate(dg, 0.1);
  auto sg = sampling_oracle([&](cplx s) { return g.evaluate(s); }, strip_region(cg, 50.0, 2001, 41));
  ++r.cases;
  if (std::fabs(cg.bound - 13.0) > 1e-12) fail(r, "closed form certificate " + num(cg.bound) + ", expected 13");
  ++r.cases;
  if (std::fabs(sg.sup - 5.0) > 1e-9) fail(r, "closed form sup " + num(sg.sup) + ", expected 5");
  r.details["closed_form_certificate"] = cg.bound;
  r.details["closed_form_sup"] = sg.sup;
  r.details["derivative_cases"] = derivative_cases;
}

double slope(double x0, double y0, double x1, double y1) { return (std::log(y1) - std::log(y0)) / (std::log(x1) - std::log(x0)); }

void derivative_shape(SuiteResult& r, const SuiteOptions&) {
  r.property = "composed derivative certificate has polynomial shape c' ((1+|gamma|)/delta)^k'";
  r.notes.push_back("c and c' are model constants");
  const std::vector<double> gammas = {0, 1, 2, 4, 8, 16, 32, 64};
  json sweeps = json::array();
  for (double c : {1.0, 2.5, 4.0}) {
    for (int alpha : {0, 1, 2}) {
      for (double delta : {0.5, 0.25, 0.1}) {
        std::vector<ComposedArchimedean> runs;
        for (double g : gammas) runs.push_back(composed_archimedean_bound(g, c, delta, alpha));
        const int k = runs.front().k_prime;
        for (std::size_t t = 0; t < runs.size(); ++t) {
          ++r.cases;
          const auto& run = runs[t];
          double shape = run.c_prime * std::pow((1.0 + gammas[t]) / delta, run.k_prime);
          if (run.k_prime != k) fail(r, "k' changed along the sweep");
          if (run.certificate.bound > shape * (1.0 + 1e-12))
            fail(r, "bound " + num(run.certificate.bound) + " above shape " + num(shape));
        }
        const auto& a = runs[runs.size() - 2];
        const auto& b = runs.back();
        double s = slope(1.0 + gammas[gammas.size() - 2], a.certificate.bound, 1.0 + gammas.back(), b.certificate.bound);
        double target = b.gamma_degree;
        double rel = target == 0.0 ? std::fabs(s) : std::fabs(s - target) / target;
        ++r.cases;
        r.max_error = std::max(r.max_error, rel);
        if (rel > 0.05) fail(r, "tail slope " + num(s) + " vs degree " + num(target));
        if (b.gamma_degree > k) fail(r, "gamma degree exceeds k'");
        sweeps.push_back({{"c", c}, {"alpha", alpha}, {"delta", delta}, {"k_prime", k}, {"c_prime", b.c_prime},
                          {"tail_slope", s}, {"gamma_degree", b.gamma_degree}});
      }
      // Delta sweep at fixed gamma.
      auto lo = composed_archimedean_bound(4.0, c, 0.05, alpha);
      auto hi = composed_archimedean_bound(4.0, c, 0.1, alpha);
      double s = -slope(0.05, lo.certificate.bound, 0.1, hi.certificate.bound);
      double rel = std::fabs(s - lo.delta_degree) / std::max(1, lo.delta_degree);
      ++r.cases;
      if (rel > 0.05) fail(r, "delta slope " + num(s) + " vs degree " + std::to_string(lo.delta_degree));
    }
  }
  r.details["sweeps"] = sweeps;
}

void conductors(SuiteResult& r, const SuiteOptions& o) {
  r.property = "conductor interval, exponent bounds and residual parameters";
  auto check = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) fail(r, what);
  };
  auto iv = conductor_bound_interval(2, 2, 3, 3);
  check(iv.lo == 0 && iv.hi == 11, "interval for (2,2,3,3) is [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]");
  check(iv.zero_permissible, "(2,2,3,3) should permit conductor zero");
  check(!conductor_bound_interval(2, 1, 3, 3).zero_permissible, "(2,1,3,3) should not permit conductor zero");
  check(conductor_bound_interval(2, 2, 3, 3).zero_permissible == conductor_bound_interval(3, 3, 2, 2).zero_permissible,
        "interval is not symmetric");
  check(conductor_bound_interval(2, 2, 4, 4).zero_permissible, "(2,2,4,4) should permit conductor zero");
  check(lrs_bound_exact(2) == Rational(3, 10) && lrs_bound(2) == 0.3, "lrs_bound(2) != 3/10");
  check(lrs_bound_exact(3) == Rational(2, 5) && lrs_bound(3) == 0.4, "lrs_bound(3) != 2/5");
  const double s01[] = {0.1};
  auto res = residual_parameters(2, s01);
  check(res.size() == 2 && res[0] == 0.6 && res[1] == -0.4, "residual_parameters(2,(0.1)) != (0.6,-0.4)");
  Rng rng(mix(o.seed, 9, 0));
  const int count = pick(o.count, 200);
  for (int i = 0; i < count; ++i) {
    int n1 = static_cast<int>(rng.uniform_int(1, 6)), n2 = static_cast<int>(rng.uniform_int(1, 6));
    int f1 = static_cast<int>(rng.uniform_int(0, 12)), f2 = static_cast<int>(rng.uniform_int(0, 12));
    auto a = conductor_bound_interval(n1, f1, n2, f2);
    auto b = conductor_bound_interval(n2, f2, n1, f1);
    check(a.lo == b.lo && a.hi == b.hi && a.zero_permissible == b.zero_permissible, "interval not symmetric");
    check(a.lo <= a.hi && a.hi == n1 * f1 + n2 * f2 - std::min(f1, f2), "interval upper end");
    auto d = random_discrete_datum(static_cast<int>(rng.uniform_int(1, 6)), nonarch_cycle(i), rng.next());
    std::vector<int> parts;
    for (const auto& c : expand_constituents(d)) parts.push_back(block_conductor(c.unit));
    check(datum_conductor(d) == conductor_additivity(parts), "datum conductor is not additive");
    check(datum_conductor(contragredient(d)) == datum_conductor(d), "contragredient changes the conductor");
  }
}

// Product of rank-one factors along a chain of adjacent charts.
cplx path_product(const std::vector<ParabolicChart>& path, const LeviDatum& pi, std::span<const cplx> s,
                  CrossedPairSet* seen) {
  cplx acc = 1.0;
  std::vector<IndexPair> pairs;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    auto p = adjacent_crossed_pair(path[t], path[t + 1]);
    pairs.push_back(p);
    acc *= rank_one_normalizer(pi.components[p.i], pi.components[p.j]).evaluate(s[p.i] - s[p.j]);
  }
  if (seen) *seen = CrossedPairSet(pairs);
  return acc;
}

InducedDatum any_datum(std::size_t i, Rng& rng) {
  const auto field = field_cycle(i);
  const int n = static_cast<int>(rng.uniform_int(1, 6));
  switch (rng.uniform_int(0, 2)) {
    case 0: return random_generic_datum(n, field, rng.next());
    case 1: return random_discrete_datum(n, field, rng.next());
    default: return random_tempered_datum(n, field, rng.next());
  }
}

void structural(SuiteResult& r, const SuiteOptions& o) {
  r.property = "crossed-pair symmetry, path independence, contragredient involution and L-factor symmetry";
  const int scale = pick(o.count, 1);
  std::map<std::string, std::size_t> counts;
  Rng rng(mix(o.seed, 10, 0));

  for (int i = 0; i < 20000 * scale; ++i) {
    const int rank = static_cast<int>(rng.uniform_int(1, 7));
    Composition levi(std::vector<int>(rank, 1));
    ParabolicChart a(levi, random_permutation(rank, rng)), b(levi, random_permutation(rank, rng));
    ++r.cases;
    ++counts["crossed_pairs"];
    auto ab = crossed_pairs(a, b);
    if (!(crossed_pairs(b, a) == ab.transposed()) || !crossed_pairs(a, a).empty() ||
        static_cast<int>(crossed_pairs(ParabolicChart::standard(levi), ParabolicChart::opposite(levi)).size()) !=
            rank * (rank - 1) / 2)
      fail(r, "crossed-pair symmetry fails for rank " + std::to_string(rank));
  }

  for (int i = 0; i < 20 * scale; ++i) {
    const auto field = field_cycle(i);
    auto pi = random_levi_datum(static_cast<int>(rng.uniform_int(3, 6)), field, rng.next());
    auto levi = levi_composition(pi);
    ParabolicChart a(levi, random_permutation(levi.size(), rng)), b(levi, random_permutation(levi.size(), rng));
    auto nf = normalizing_factor(a, b, pi);
    auto pool = random_samples(levi.size(), 40, rng.next());
    std::vector<std::vector<cplx>> samples;
    for (const auto& s : pool)
      if (samples.size() < 3 && nf.distance_to_singularity(s) >= 1e-4) samples.push_back(s);
    std::vector<std::vector<ParabolicChart>> paths = {rank_one_path(a, b)};
    for (int k = 0; k < 5; ++k) paths.push_back(random_reduced_path(a, b, rng.engine()));
    for (const auto& path : paths) {
      ++r.cases;
      ++counts["path_independence"];
      if (path.size() != nf.crossed.size() + 1) {
        fail(r, "path is not reduced");
        continue;
      }
      for (const auto& s : samples) {
        CrossedPairSet seen;
        double err = relative_error(path_product(path, pi, s, &seen), nf.evaluate(s));
        r.max_error = std::max(r.max_error, err);
        if (!(seen == nf.crossed)) fail(r, "path crosses a different pair set");
        if (!(err < 1e-10)) fail(r, "path product differs by " + num(err));
      }
    }
  }

  for (int i = 0; i < 30000 * scale; ++i) {
    auto d = any_datum(i, rng);
    ++r.cases;
    ++counts["contragredient_involution"];
    if (!(contragredient(contragredient(d)) == d)) fail(r, "contragredient is not an involution: " + describe_datum(d));
  }

  for (int i = 0; i < 30000 * scale; ++i) {
    auto d1 = any_datum(i, rng);
    auto d2 = any_datum(i, rng);
    ++r.cases;
    ++counts["descriptor_symmetry"];
    if (!same_atoms(l_induced_pair(d1, d2), l_induced_pair(d2, d1)))
      fail(r, "L(a x b) != L(b x a) for " + describe_datum(d1) + " and " + describe_datum(d2));
  }
  for (const auto& [k, v] : counts) r.details[k] = v;
}

using SuiteFn = std::function<void(SuiteResult&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"pole-location", pole_location},
      {"normalization-comparison", normalization_comparison},
      {"plancherel", plancherel},
      {"induction-stages", induction_stages},
      {"holomorphy", holomorphy},
      {"annulus-bound", annulus_bound},
      {"strip-bound", strip_bound},
      {"derivative-shape", derivative_shape},
      {"conductors", conductors},
      {"structural", structural},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(r, opts);
    } catch (const std::exception& e) {
      fail(r, std::string("uncaught exception: ") + e.what());
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.failures == 0 && r.cases > 0;
    return r;
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

json to_json(const SuiteResult& r) {
  json j;
  j["suite"] = r.name;
  j["property"] = r.property;
  j["status"] = r.passed ? "pass" : "fail";
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  j["max_error"] = r.max_error;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["witnesses"] = r.witnesses;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["details"] = r.details;
  return j;
}

}  // namespace locnorm
