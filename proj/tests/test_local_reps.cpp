#include <locnorm/local_reps.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace locnorm;

namespace {

SupercuspidalStandIn cusp(std::string id, bool self_dual = true, double t = 0.0, int degree = 1, int conductor = 0) {
  SupercuspidalStandIn c;
  c.degree = degree;
  c.twist_order = 1;
  c.conductor = conductor;
  c.class_id = std::move(id);
  c.self_dual = self_dual;
  c.twist = t;
  return c;
}

SquareIntegrableBlock seg(int length, SupercuspidalStandIn c) { return Segment{length, std::move(c)}; }

InducedDatum nonarch_datum(std::vector<Block> blocks, Flavor flavor = Flavor::generic) {
  return InducedDatum{LocalField::nonarch(3), std::move(blocks), flavor, false};
}

// Oracle: multiset equality of (unit, s) with (unit, -s) by trying every
// permutation of the partner assignment.
bool brute_hermitian(const InducedDatum& d) {
  auto c = canonicalize(d);
  const auto s = canonical_shifts(c);
  std::vector<int> perm(c.blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t j = 0; j < perm.size() && ok; ++j)
      ok = c.blocks[j].unit == c.blocks[perm[j]].unit && approx_equal(s[j], -s[perm[j]], 1e-12);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LocalField field_for(int i) {
  switch (i % 4) {
    case 0: return LocalField::real();
    case 1: return LocalField::complex();
    case 2: return LocalField::nonarch(2);
    default: return LocalField::nonarch(5);
  }
}

}  // namespace

TEST_SUITE("local_reps") {
  TEST_CASE("field legality of blocks") {
    CHECK(legal_for(LocalField::real(), RealDS{3, 0.0}));
    CHECK(legal_for(LocalField::real(), RealChar{1, 0.0}));
    CHECK_FALSE(legal_for(LocalField::real(), ComplexChar{1, 0.0}));
    CHECK_FALSE(legal_for(LocalField::complex(), RealChar{0, 0.0}));
    CHECK_FALSE(legal_for(LocalField::nonarch(3), RealDS{2, 0.0}));
    CHECK(legal_for(LocalField::nonarch(3), seg(2, cusp("1"))));
    CHECK_FALSE(legal_for(LocalField::real(), seg(2, cusp("1"))));
    CHECK_THROWS(LocalField::nonarch(1));
  }

  TEST_CASE("degrees") {
    CHECK(degree(SquareIntegrableBlock{RealDS{2, 0.0}}) == 2);
    CHECK(degree(SquareIntegrableBlock{RealChar{0, 0.0}}) == 1);
    CHECK(degree(seg(3, cusp("x", true, 0.0, 2))) == 6);
    CHECK(degree(Unit{SpehBlock{seg(2, cusp("1")), 3}}) == 6);
  }

  TEST_CASE("contragredient of a self-dual tempered datum is itself") {
    InducedDatum d = nonarch_datum({{seg(2, cusp("1")), 0.0}, {seg(1, cusp("q")), 0.0}}, Flavor::tempered);
    CHECK(contragredient(d) == d);
  }

  TEST_CASE("contragredient dualizes segments") {
    auto d = contragredient(nonarch_datum({{seg(3, cusp("w", false, 0.2)), 0.0}}, Flavor::tempered));
    const auto& s = std::get<Segment>(std::get<SquareIntegrableBlock>(d.blocks[0].unit));
    CHECK(s.length == 3);
    CHECK(s.cusp.twist == -0.2);
    CHECK(s.cusp.class_id == "w~");
    CHECK(s.cusp.dual().class_id == "w");
  }

  TEST_CASE("contragredient over archimedean fields") {
    InducedDatum d{LocalField::complex(), {{ComplexChar{3, 0.1}, 0.2}, {ComplexChar{-1, 0.0}, -0.2}}, Flavor::generic, false};
    auto c = contragredient(d);
    REQUIRE(c.blocks.size() == 2);
    CHECK(std::get<ComplexChar>(std::get<SquareIntegrableBlock>(c.blocks[0].unit)).r == 1);
    CHECK(c.blocks[0].shift == 0.2);
    CHECK(std::get<ComplexChar>(std::get<SquareIntegrableBlock>(c.blocks[1].unit)).r == -3);
    CHECK(std::get<ComplexChar>(std::get<SquareIntegrableBlock>(c.blocks[1].unit)).twist == -0.1);
  }

  TEST_CASE("contragredient is an involution on generated data") {
    for (int i = 0; i < 400; ++i) {
      auto f = field_for(i);
      int n = 1 + i % 6;
      CHECK(contragredient(contragredient(random_discrete_datum(n, f, i))) == random_discrete_datum(n, f, i));
      CHECK(contragredient(contragredient(random_generic_datum(n, f, i))) == random_generic_datum(n, f, i));
    }
  }

  TEST_CASE("hermitian symmetry examples") {
    auto d1 = seg(1, cusp("1"));
    auto d2 = seg(1, cusp("q"));
    auto d3 = seg(2, cusp("1"));
    auto a = check_hermitian_symmetry(nonarch_datum({{d1, 0.3}, {d1, -0.3}}));
    CHECK(a.symmetric);
    CHECK(a.partner == std::vector<int>{1, 0});
    CHECK_FALSE(check_hermitian_symmetry(nonarch_datum({{d1, 0.1}})).symmetric);
    CHECK_FALSE(check_hermitian_symmetry(nonarch_datum({{d3, 0.4}, {d1, 0.2}, {d2, 0.0}, {d1, -0.2}})).symmetric);
  }

  TEST_CASE("hermitian check agrees with a permutation oracle") {
    std::mt19937_64 rng(21);
    const SquareIntegrableBlock pool[] = {seg(1, cusp("1")), seg(1, cusp("q")), seg(2, cusp("1"))};
    const double shifts[] = {-0.3, -0.1, 0.0, 0.1, 0.3};
    for (int t = 0; t < 600; ++t) {
      std::vector<Block> b;
      int r = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < r; ++i) b.push_back({pool[rng() % 3], shifts[rng() % 5]});
      if (t % 2 == 0 && r <= 2) {
        b = {b[0], {b[0].unit, -b[0].shift}};
      }
      std::sort(b.begin(), b.end(), [](const Block& x, const Block& y) { return x.shift > y.shift; });
      auto d = nonarch_datum(b);
      auto got = check_hermitian_symmetry(d);
      CHECK(got.symmetric == brute_hermitian(d));
      if (got.symmetric) {
        auto s = canonical_shifts(d);
        for (std::size_t j = 0; j < b.size(); ++j) {
          int k = got.partner[j];
          CHECK(b[j].unit == b[k].unit);
          CHECK(approx_equal(s[j], -s[k]));
        }
      }
    }
  }

  TEST_CASE("exponent bound") {
    CHECK(lrs_bound(2) == 0.3);
    CHECK(lrs_bound(3) == 0.4);
    CHECK(lrs_bound(1) == 0.0);
    CHECK(lrs_bound_exact(2) == Rational(3, 10));
    CHECK(lrs_bound_exact(4) == Rational(15, 34));
    CHECK_THROWS(lrs_bound(0));
  }

  TEST_CASE("residual parameters") {
    const double a[] = {0.25, -0.1};
    CHECK(residual_parameters(1, a) == std::vector<double>{0.25, -0.1});
    const double b[] = {0.1};
    CHECK(residual_parameters(2, b) == std::vector<double>{0.6, -0.4});
    const double c[] = {0.2, -0.2};
    CHECK(residual_parameters(3, c) == std::vector<double>{1.2, 0.8, 0.2, -0.2, -0.8, -1.2});
    const double bad[] = {-0.1, 0.1};
    CHECK_THROWS(residual_parameters(2, bad));
  }

  TEST_CASE("residual parameters properties") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-4999, 4999);
    for (int t = 0; t < 500; ++t) {
      int r = 1 + t % 4, k = 1 + t % 5;
      std::vector<double> s(r);
      for (auto& x : s) x = num(rng) / 10000.0;
      std::sort(s.rbegin(), s.rend());
      auto out = residual_parameters(k, s);
      REQUIRE(out.size() == static_cast<std::size_t>(k * r));
      CHECK(std::is_sorted(out.rbegin(), out.rend()));
      double mx = 0.0, ms = 0.0;
      for (double x : out) mx = std::max(mx, std::fabs(x));
      for (double x : s) ms = std::max(ms, std::fabs(x));
      CHECK(mx == doctest::Approx(0.5 * (k - 1) + ms).epsilon(1e-14));
      // Symmetric output exactly when the input is.
      auto neg = [](std::vector<double> v) {
        for (auto& x : v) x = -x;
        std::sort(v.rbegin(), v.rend());
        return v;
      };
      auto close = [](const std::vector<double>& x, const std::vector<double>& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
          if (std::fabs(x[i] - y[i]) > 1e-12) return false;
        return true;
      };
      CHECK(close(out, neg(out)) == close(s, neg(s)));
    }
  }

  TEST_CASE("residual local component") {
    auto d1 = seg(1, cusp("1"));
    auto one = residual_local_component(1, nonarch_datum({{d1, 0.0}}, Flavor::tempered));
    CHECK(speh_k(one.blocks[0].unit) == 1);
    auto two = residual_local_component(2, nonarch_datum({{d1, 0.0}}, Flavor::tempered));
    CHECK(std::get<SpehBlock>(two.blocks[0].unit).k == 2);
    auto pair = residual_local_component(2, nonarch_datum({{d1, 0.1}, {d1, -0.1}}));
    CHECK(pair.flavor == Flavor::discrete_local);
    CHECK(invariant_violations(pair).empty());
    CHECK_THROWS_AS(residual_local_component(2, nonarch_datum({{d1, 0.45}, {d1, -0.45}})), InvariantViolation);
  }

  TEST_CASE("linked segments") {
    auto d = seg(1, cusp("1"));
    auto other = seg(1, cusp("q"));
    CHECK_FALSE(linked_segments({d, 0, 2}, {d, 0, 2}));
    CHECK(linked_segments({d, 0, 2}, {d, 1, 3}));
    CHECK_FALSE(linked_segments({d, 0, 3}, {d, 1, 2}));
    CHECK_FALSE(linked_segments({d, 0, 2}, {other, 1, 3}));
    CHECK_FALSE(linked_segments({d, 0, 2}, {d, 0.5, 2.5}));
    CHECK(linked_segments({d, 0, 1}, {d, 2, 3}));
    CHECK_FALSE(linked_segments({d, 0, 1}, {d, 3, 4}));
    CHECK(linked_ends_separated({d, 0, 2}, {d, 1, 3}));
  }

  TEST_CASE("generated discrete data are valid, unlinked and deterministic") {
    auto single = random_discrete_datum(1, LocalField::nonarch(3), 5);
    REQUIRE(single.blocks.size() == 1);
    CHECK(canonical_shifts(single)[0].value() == 0.0);
    CHECK(random_discrete_datum(4, LocalField::nonarch(3), 7) == random_discrete_datum(4, LocalField::nonarch(3), 7));
    for (int i = 0; i < 600; ++i) {
      auto f = field_for(i);
      int n = 1 + i % 6;
      auto d = random_discrete_datum(n, f, 1000 + i);
      CHECK(degree(d) == n);
      CHECK(invariant_violations(d).empty());
      ExactReal mx;
      for (const auto& s : canonical_shifts(d)) mx = compare(mx, s.value() < 0 ? -s : s, 0) < 0 ? (s.value() < 0 ? -s : s) : mx;
      if (n > 1) CHECK(compare(mx, ExactReal(lrs_bound_exact(n)), 0.0) < 0);
      if (!f.archimedean()) {
        for (std::size_t a = 0; a < d.blocks.size(); ++a)
          for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
            auto ta = speh_triple(std::get<SpehBlock>(d.blocks[a].unit), d.blocks[a].shift);
            auto tb = speh_triple(std::get<SpehBlock>(d.blocks[b].unit), d.blocks[b].shift);
            CHECK_FALSE(linked_segments(ta, tb));
          }
      }
      auto g = random_generic_datum(n, f, 2000 + i);
      CHECK(invariant_violations(g).empty());
      CHECK(degree(g) == n);
      CHECK(invariant_violations(random_tempered_datum(n, f, 3000 + i)).empty());
    }
  }

  TEST_CASE("common and mixed k options") {
    GeneratorOptions common;
    common.common_k = true;
    for (int i = 0; i < 100; ++i) {
      auto d = random_discrete_datum(6, LocalField::nonarch(2), i, common);
      int k0 = speh_k(d.blocks[0].unit);
      for (const auto& b : d.blocks) CHECK(speh_k(b.unit) == k0);
    }
    GeneratorOptions mixed;
    mixed.common_k = false;
    for (int i = 0; i < 100; ++i) CHECK(invariant_violations(random_discrete_datum(6, LocalField::nonarch(2), i, mixed)).empty());
  }

  TEST_CASE("invariants reject bad data") {
    auto d1 = seg(1, cusp("1"));
    CHECK_FALSE(invariant_violations(nonarch_datum({{d1, 0.1}}, Flavor::tempered)).empty());
    CHECK_FALSE(invariant_violations(nonarch_datum({{d1, -0.2}, {d1, 0.2}})).empty());
    CHECK_FALSE(invariant_violations(nonarch_datum({{d1, 0.5}, {d1, -0.5}})).empty());
    CHECK_FALSE(invariant_violations(nonarch_datum({{RealDS{2, 0.0}, 0.0}}, Flavor::tempered)).empty());
    CHECK_THROWS_AS(require_valid(nonarch_datum({{d1, 0.1}}, Flavor::tempered)), InvariantViolation);
  }

  TEST_CASE("canonicalize folds twists into shifts") {
    InducedDatum d{LocalField::real(), {{RealChar{0, 0.25}, -0.05}, {RealChar{0, 0.0}, 0.1}}, Flavor::generic, false};
    auto c = canonicalize(d);
    REQUIRE(c.blocks.size() == 2);
    CHECK(c.blocks[0].shift == 0.2);
    CHECK(twist(square_integrable_part(c.blocks[0].unit)) == 0.0);
    CHECK(c.blocks[1].shift == 0.1);
  }
}
