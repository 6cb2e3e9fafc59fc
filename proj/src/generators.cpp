#include <locnorm/eps_conductor.hpp>
#include <locnorm/local_reps.hpp>

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace locnorm {

namespace {

using detail::Rng;

std::vector<int> divisors(int m) {
  std::vector<int> d;
  for (int i = 1; i <= m; ++i)
    if (m % i == 0) d.push_back(i);
  return d;
}

SupercuspidalStandIn catalog_cusp(int degree, Rng& rng) {
  SupercuspidalStandIn c;
  c.degree = degree;
  if (degree == 1) {
    switch (rng.uniform_int(0, 3)) {
      case 0:
      case 1: return c;  // unramified
      case 2:
        c.class_id = "q";
        c.conductor = 1;
        return c;
      default:
        c.class_id = rng.coin() ? "w" : "w~";
        c.conductor = 2;
        c.self_dual = false;
        return c;
    }
  }
  if (rng.coin()) {
    c.class_id = "s" + std::to_string(degree);
    c.conductor = degree + 1;
  } else {
    c.class_id = rng.coin() ? "t" + std::to_string(degree) : "t" + std::to_string(degree) + "~";
    c.twist_order = degree;
    c.conductor = degree;
    c.self_dual = false;
  }
  return c;
}

bool degree_legal(const LocalField& f, int d) {
  switch (f.kind) {
    case FieldKind::real: return d == 1 || d == 2;
    case FieldKind::complex: return d == 1;
    case FieldKind::nonarch: return d >= 1;
  }
  return false;
}

SquareIntegrableBlock random_block(const LocalField& f, int d, Rng& rng) {
  switch (f.kind) {
    case FieldKind::real:
      if (d == 1) return RealChar{static_cast<int>(rng.uniform_int(0, 1)), 0.0};
      return RealDS{static_cast<int>(rng.uniform_int(1, 6)), 0.0};
    case FieldKind::complex: return ComplexChar{static_cast<int>(rng.uniform_int(-3, 3)), 0.0};
    case FieldKind::nonarch: {
      auto ds = divisors(d);
      int c = ds[rng.uniform_int(0, static_cast<long long>(ds.size()) - 1)];
      return Segment{d / c, catalog_cusp(c, rng)};
    }
  }
  throw std::logic_error("unreachable");
}

int random_legal_degree(const LocalField& f, int max_degree, Rng& rng) {
  std::vector<int> ok;
  for (int d = 1; d <= max_degree; ++d)
    if (degree_legal(f, d)) ok.push_back(d);
  if (ok.empty()) throw std::invalid_argument("no legal block fits");
  return ok[rng.uniform_int(0, static_cast<long long>(ok.size()) - 1)];
}

std::vector<int> random_composition(int n, Rng& rng) {
  std::vector<int> parts{1};
  for (int i = 1; i < n; ++i) {
    if (rng.coin())
      parts.push_back(1);
    else
      ++parts.back();
  }
  return parts;
}

// Integer numerator of a shift p/D drawn uniformly with |p/D| <= bound.
double quantized_shift(double bound, int denominator, Rng& rng) {
  long long K = static_cast<long long>(std::floor(bound * denominator));
  if (K < 0) K = 0;
  long long p = rng.uniform_int(-K, K);
  return ExactReal(Rational(p, denominator)).value();
}

void sort_by_shift(std::vector<Block>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.shift > y.shift; });
}

// Moves part of the shift into the block twist without changing the
// folded exponent.
void scatter_twists(InducedDatum& d, int denominator, Rng& rng) {
  for (auto& b : d.blocks) {
    if (rng.uniform_int(0, 3) != 0) continue;
    Rational tau(rng.uniform_int(-denominator / 10, denominator / 10), denominator);
    double new_shift = (ExactReal(b.shift) - ExactReal(tau)).value();
    if (!ExactReal(new_shift).is_exact()) continue;
    if (auto* sp = std::get_if<SpehBlock>(&b.unit))
      sp->delta = with_twist(sp->delta, tau.to_double());
    else
      b.unit = with_twist(std::get<SquareIntegrableBlock>(b.unit), tau.to_double());
    b.shift = new_shift;
  }
}

bool try_discrete(int n, const LocalField& field, bool common_k, const GeneratorOptions& opts, Rng& rng,
                  InducedDatum& out) {
  auto parts = random_composition(n, rng);
  out = InducedDatum{field, {}, Flavor::discrete_local, !common_k};
  std::vector<std::pair<int, int>> shape;  // (delta degree, k)
  if (common_k) {
    std::vector<int> ks;
    for (int k : divisors(parts.front())) {
      bool ok = std::all_of(parts.begin(), parts.end(), [&](int p) { return p % k == 0 && degree_legal(field, p / k); });
      if (ok) ks.push_back(k);
    }
    if (ks.empty()) return false;
    int k = ks[rng.uniform_int(0, static_cast<long long>(ks.size()) - 1)];
    for (int p : parts) shape.push_back({p / k, k});
  } else {
    for (int p : parts) {
      std::vector<int> ds;
      for (int d : divisors(p))
        if (degree_legal(field, d)) ds.push_back(d);
      int d = ds[rng.uniform_int(0, static_cast<long long>(ds.size()) - 1)];
      shape.push_back({d, p / d});
    }
  }
  const double bound = lrs_bound(n) - opts.margin;
  for (auto [d, k] : shape)
    out.blocks.push_back({SpehBlock{random_block(field, d, rng), k}, quantized_shift(bound, opts.shift_denominator, rng)});
  sort_by_shift(out.blocks);
  return datum_conductor(out) <= opts.conductor_cap;
}

}  // namespace

InducedDatum random_discrete_datum(int n, const LocalField& field, std::uint64_t seed, const GeneratorOptions& opts) {
  if (n < 1) throw std::invalid_argument("random_discrete_datum: n must be positive");
  Rng rng(seed);
  bool common_k = opts.common_k.value_or(rng.coin());
  InducedDatum out;
  for (int attempt = 0; attempt < 200; ++attempt)
    if (try_discrete(n, field, common_k, opts, rng, out)) {
      scatter_twists(out, opts.shift_denominator, rng);
      return out;
    }
  // Fallback that always satisfies every cap: one Speh block of a GL_1 unit.
  SquareIntegrableBlock unit;
  switch (field.kind) {
    case FieldKind::real: unit = RealChar{0, 0.0}; break;
    case FieldKind::complex: unit = ComplexChar{0, 0.0}; break;
    case FieldKind::nonarch: unit = Segment{1, SupercuspidalStandIn{}}; break;
  }
  return InducedDatum{field, {{SpehBlock{unit, n}, quantized_shift(lrs_bound(n) - opts.margin, opts.shift_denominator, rng)}},
                      Flavor::discrete_local, !common_k};
}

InducedDatum random_generic_datum(int n, const LocalField& field, std::uint64_t seed, const GeneratorOptions& opts) {
  if (n < 1) throw std::invalid_argument("random_generic_datum: n must be positive");
  Rng rng(seed);
  InducedDatum out{field, {}, Flavor::generic, false};
  int remaining = n;
  while (remaining > 0) {
    bool pair = remaining >= 2 && rng.uniform_int(0, 2) != 0;
    if (pair) {
      int d = random_legal_degree(field, remaining / 2, rng);
      auto b = random_block(field, d, rng);
      double s = std::fabs(quantized_shift(0.5 - opts.margin, opts.shift_denominator, rng));
      out.blocks.push_back({b, s});
      out.blocks.push_back({b, -s});
      remaining -= 2 * d;
    } else {
      int d = random_legal_degree(field, remaining, rng);
      out.blocks.push_back({random_block(field, d, rng), 0.0});
      remaining -= d;
    }
  }
  sort_by_shift(out.blocks);
  return out;
}

InducedDatum random_tempered_datum(int n, const LocalField& field, std::uint64_t seed, const GeneratorOptions&) {
  if (n < 1) throw std::invalid_argument("random_tempered_datum: n must be positive");
  Rng rng(seed);
  InducedDatum out{field, {}, Flavor::tempered, false};
  int remaining = n;
  while (remaining > 0) {
    int d = random_legal_degree(field, remaining, rng);
    out.blocks.push_back({random_block(field, d, rng), 0.0});
    remaining -= d;
  }
  return out;
}

LeviDatum random_levi_datum(int n, const LocalField& field, std::uint64_t seed, const GeneratorOptions& opts) {
  if (n < 2) throw std::invalid_argument("random_levi_datum: n must be at least 2");
  Rng rng(seed);
  std::vector<int> parts;
  do parts = random_composition(n, rng);
  while (parts.size() < 2);
  LeviDatum out{field, {}};
  for (int p : parts) out.components.push_back(random_discrete_datum(p, field, rng.next(), opts));
  return out;
}

}  // namespace locnorm
