#include <locnorm/gamma.hpp>
#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace locnorm;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SquareIntegrableBlock seg(int length, std::string id = "1", int degree = 1, int twist_order = 1, bool self_dual = true) {
  SupercuspidalStandIn c;
  c.degree = degree;
  c.twist_order = twist_order;
  c.class_id = std::move(id);
  c.self_dual = self_dual;
  return Segment{length, c};
}

LocalField field_for(int i) {
  switch (i % 5) {
    case 0: return LocalField::real();
    case 1: return LocalField::complex();
    case 2: return LocalField::nonarch(2);
    case 3: return LocalField::nonarch(3);
    default: return LocalField::nonarch(5);
  }
}

Block blk(SquareIntegrableBlock b, double shift) { return {Unit(std::move(b)), shift}; }

InducedDatum shifted(InducedDatum d, double t) {
  for (auto& b : d.blocks) b.shift += t;
  d.flavor = Flavor::generic;
  return d;
}

}  // namespace

TEST_SUITE("lfactors") {
  TEST_CASE("gamma on the real line against the standard library") {
    for (double x = 0.05; x < 25.0; x += 0.173) CHECK(rel(gamma(cplx(x, 0.0)), std::tgamma(x)) < 1e-13);
    for (double x = -7.9; x < 0.0; x += 0.31)
      if (std::fabs(x - std::round(x)) > 1e-3) CHECK(rel(gamma(cplx(x, 0.0)), std::tgamma(x)) < 1e-12);
    CHECK(std::abs(reciprocal_gamma(cplx(-3.0, 0.0))) < 1e-15);
  }

  TEST_CASE("complex gamma identities") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> re(-6.0, 8.0), im(-10.0, 10.0);
    for (int t = 0; t < 400; ++t) {
      cplx z(re(rng), im(rng));
      if (std::fabs(z.imag()) < 0.05) continue;
      CHECK(rel(gamma(z + 1.0), z * gamma(z)) < 1e-12);
      CHECK(rel(gamma(z) * gamma(1.0 - z), kPi / std::sin(kPi * z)) < 1e-11);
    }
    for (double t = -8.0; t <= 8.0; t += 0.5) {
      double g = std::norm(gamma(cplx(0.5, t)));
      CHECK(g == doctest::Approx(kPi / std::cosh(kPi * t)).epsilon(1e-12));
    }
  }

  TEST_CASE("archimedean gamma factors") {
    CHECK(rel(gamma_R(1.0), 1.0) < 1e-15);
    CHECK(rel(gamma_C(1.0), 1.0 / kPi) < 1e-15);
    CHECK(rel(gamma_R(2.0), 1.0 / kPi) < 1e-15);
    CHECK(rel(reciprocal_gamma_C(cplx(0.3, 1.0)) * gamma_C(cplx(0.3, 1.0)), 1.0) < 1e-14);
  }

  TEST_CASE("real table") {
    auto l = l_square_integrable_pair(LocalField::real(), RealChar{0, 0.0}, RealChar{0, 0.0});
    CHECK(l.pretty() == "Γ_ℝ(s)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealChar{1, 0.0}, RealChar{1, 0.0}).pretty() == "Γ_ℝ(s)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealChar{0, 0.0}, RealChar{1, 0.0}).pretty() == "Γ_ℝ(s+1)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealDS{2, 0.0}, RealDS{2, 0.0}).pretty() == "Γ_ℂ(s)Γ_ℂ(s+2)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealDS{3, 0.0}, RealDS{1, 0.0}).pretty() == "Γ_ℂ(s+1)Γ_ℂ(s+2)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealDS{3, 0.0}, RealChar{1, 0.0}).pretty() == "Γ_ℂ(s+3/2)");
    CHECK(l_square_integrable_pair(LocalField::real(), RealChar{0, 0.0}, RealDS{4, 0.0}).pretty() == "Γ_ℂ(s+2)");
    // twists t1 + t2 move every shift
    CHECK(l_square_integrable_pair(LocalField::real(), RealChar{0, 0.25}, RealChar{0, 0.25}).pretty() == "Γ_ℝ(s+1/2)");
  }

  TEST_CASE("complex table") {
    CHECK(l_square_integrable_pair(LocalField::complex(), ComplexChar{3, 0.0}, ComplexChar{-1, 0.0}).pretty() == "Γ_ℂ(s+1)");
    CHECK(l_square_integrable_pair(LocalField::complex(), ComplexChar{2, 0.0}, ComplexChar{-2, 0.0}).pretty() == "Γ_ℂ(s)");
  }

  TEST_CASE("segment pairs") {
    const auto f = LocalField::nonarch(3);
    for (int r = 1; r <= 4; ++r)
      for (int a : {1, 2}) {
        auto s = seg(r, "x", 2, a);
        auto l = l_square_integrable_pair(f, s, dual(s));
        REQUIRE(l.padic_atoms().size() == static_cast<std::size_t>(r));
        for (int j = 1; j <= r; ++j) {
          const auto& atom = l.padic_atoms()[j - 1];
          CHECK(atom.period == a);
          CHECK(*atom.decay.exact() == Rational(a * (r - j)));
          CHECK(atom.turns.value() == 0.0);
        }
      }
    CHECK(l_square_integrable_pair(f, seg(2, "x"), seg(2, "y")).trivial());
    CHECK(l_square_integrable_pair(f, seg(2, "x", 2), seg(2, "x", 1)).trivial());
    // Different lengths: min(m1, m2) atoms at (m1 + m2)/2 - j.
    auto l = l_square_integrable_pair(f, seg(3), seg(1));
    REQUIRE(l.padic_atoms().size() == 1);
    CHECK(*l.padic_atoms()[0].decay.exact() == Rational(1));
    // A non-self-dual cusp pairs only with its dual.
    auto w = seg(1, "w", 1, 1, false);
    CHECK(l_square_integrable_pair(f, w, w).trivial());
    CHECK_FALSE(l_square_integrable_pair(f, w, dual(w)).trivial());
  }

  TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS(l_square_integrable_pair(LocalField::complex(), RealChar{0, 0.0}, RealChar{0, 0.0}));
    CHECK_THROWS(l_square_integrable_pair(LocalField::real(), seg(1), seg(1)));
  }

  TEST_CASE("induced pairs") {
    InducedDatum single{LocalField::real(), {blk(RealDS{2, 0.0}, 0.0)}, Flavor::tempered, false};
    CHECK(same_atoms(l_induced_pair(single, single),
                     l_square_integrable_pair(LocalField::real(), RealDS{2, 0.0}, RealDS{2, 0.0})));

    InducedDatum g{LocalField::real(), {blk(RealChar{0, 0.0}, 0.3), blk(RealChar{0, 0.0}, -0.3)}, Flavor::generic, false};
    auto l = l_induced_pair(g, contragredient(g));
    bool found = false;
    for (const auto& a : l.gamma_atoms()) found = found || std::abs(a.shift - cplx(-0.6, 0.0)) < 1e-15;
    CHECK(found);
    CHECK(rightmost_real_pole(l)->value() == doctest::Approx(0.6).epsilon(1e-15));

    for (int i = 0; i < 100; ++i) {
      auto f = field_for(i);
      auto d1 = random_generic_datum(1 + i % 4, f, i), d2 = random_generic_datum(1 + (i / 4) % 4, f, 77 + i);
      std::size_t count = 0;
      for (const auto& x : expand_constituents(d1))
        for (const auto& y : expand_constituents(d2)) count += l_square_integrable_pair(f, x.unit, y.unit).size();
      CHECK(l_induced_pair(d1, d2).size() == count);
    }
  }

  TEST_CASE("Speh blocks expand into their residual strings") {
    const auto f = LocalField::nonarch(2);
    InducedDatum speh{f, {Block{Unit(SpehBlock{seg(1), 2}), 0.0}}, Flavor::discrete_local, false};
    InducedDatum strings{f, {blk(seg(1), 0.5), blk(seg(1), -0.5)}, Flavor::generic, false};
    CHECK(same_atoms(l_induced_pair(speh, contragredient(speh)), l_induced_pair(strings, contragredient(strings))));
  }

  TEST_CASE("symmetry and shift equivariance") {
    for (int i = 0; i < 300; ++i) {
      auto f = field_for(i);
      auto d1 = i % 2 ? random_generic_datum(1 + i % 5, f, i) : random_discrete_datum(1 + i % 5, f, i);
      auto d2 = random_generic_datum(1 + (i / 5) % 5, f, 500 + i);
      CHECK(same_atoms(l_induced_pair(d1, d2), l_induced_pair(d2, d1)));
      ExactReal t(Rational(static_cast<int>(i % 7) - 3, 8));
      CHECK(same_atoms(l_induced_pair(shifted(d1, t.value()), d2), l_induced_pair(d1, d2).shifted(t)));
    }
  }

  TEST_CASE("tempered nonarchimedean atoms have inverse roots in the closed unit disc") {
    for (int i = 0; i < 200; ++i) {
      auto f = LocalField::nonarch(2 + i % 4);
      auto d1 = random_tempered_datum(1 + i % 4, f, i), d2 = random_tempered_datum(1 + (i / 4) % 4, f, 900 + i);
      for (const auto& a : l_induced_pair(d1, d2).padic_atoms()) CHECK(std::abs(a.inverse_root(f.q)) <= 1.0 + 1e-15);
    }
  }

  TEST_CASE("square-integrable self pairs have a pole at zero") {
    const SquareIntegrableBlock blocks[] = {RealDS{3, 0.0}, RealChar{1, 0.0}};
    for (const auto& b : blocks) CHECK(rightmost_real_pole(l_square_integrable_pair(LocalField::real(), b, dual(b)))->value() == 0.0);
    CHECK(rightmost_real_pole(l_square_integrable_pair(LocalField::complex(), ComplexChar{5, 0.0}, ComplexChar{-5, 0.0}))->value() == 0.0);
    for (int r = 1; r <= 4; ++r)
      CHECK(*rightmost_real_pole(l_square_integrable_pair(LocalField::nonarch(3), seg(r), seg(r)))->exact() == Rational(0));
  }

  TEST_CASE("pole sets") {
    CHECK(pole_set(LFactorDescriptor(LocalField::real())).empty());
    LFactorDescriptor gc(LocalField::complex());
    gc.add(GammaAtom{GammaKind::complex, 0.0});
    auto p = pole_set(gc);
    REQUIRE(p.progressions.size() == 1);
    CHECK(p.progressions[0].start == cplx(0.0, 0.0));
    CHECK(p.progressions[0].step == 1);

    LFactorDescriptor two(LocalField::nonarch(3));
    two.add(PAdicAtom{ExactReal(0), ExactReal(0), 2});
    auto z = pole_set(two);
    REQUIRE(z.z_points.size() == 2);
    for (const auto& pt : z.z_points) CHECK(std::abs(pt.z(3) * pt.z(3) - 1.0) < 1e-14);
    CHECK(std::abs(z.z_points[0].z(3) + z.z_points[1].z(3)) < 1e-14);

    LFactorDescriptor dup(LocalField::real());
    dup.add(GammaAtom{GammaKind::real, 0.5});
    dup.add(GammaAtom{GammaKind::real, 0.5});
    REQUIRE(pole_set(dup).progressions.size() == 1);
    CHECK(pole_set(dup).progressions[0].multiplicity == 2);
  }

  TEST_CASE("rightmost real pole") {
    InducedDatum t{LocalField::nonarch(3), {blk(seg(2), 0.0), blk(seg(1, "q"), 0.0)}, Flavor::tempered, false};
    CHECK(*rightmost_real_pole(l_induced_pair(t, contragredient(t)))->exact() == Rational(0));
    CHECK_FALSE(rightmost_real_pole(LFactorDescriptor(LocalField::real())).has_value());
  }

  TEST_CASE("evaluation") {
    LFactorDescriptor r(LocalField::real());
    r.add(GammaAtom{GammaKind::real, 0.0});
    CHECK(rel(evaluate_lfactor(r, 1.0), 1.0) < 1e-15);
    LFactorDescriptor p(LocalField::nonarch(4));
    p.add(PAdicAtom{ExactReal(0), ExactReal(0), 1});
    CHECK(rel(evaluate_lfactor(p, 1.0), 4.0 / 3.0) < 1e-15);
    CHECK(evaluate_lfactor(LFactorDescriptor(LocalField::nonarch(3)), cplx(0.2, 7.0)) == cplx(1.0, 0.0));
    CHECK(rel(evaluate_lfactor(p, cplx(0.3, 2.0)) * evaluate_inverse_lfactor(p, cplx(0.3, 2.0)), 1.0) < 1e-15);
  }

  TEST_CASE("evaluation at a pole reports the distance") {
    LFactorDescriptor r(LocalField::real());
    r.add(GammaAtom{GammaKind::real, 0.0});
    try {
      evaluate_lfactor(r, cplx(-2.0, 0.0));
      FAIL("expected a pole proximity error");
    } catch (const PoleProximityError& e) {
      CHECK(e.distance() < 1e-13);
    }
    LFactorDescriptor p(LocalField::nonarch(2));
    p.add(PAdicAtom{ExactReal(0), ExactReal(0), 1});
    const double period = 2 * kPi / std::log(2.0);
    CHECK_THROWS_AS(evaluate_lfactor(p, cplx(0.0, 3 * period)), PoleProximityError);
    CHECK(distance_to_pole(p, cplx(0.25, 3 * period)) == doctest::Approx(0.25));
  }

  TEST_CASE("the factor blows up next to every listed pole") {
    // compares against a point 1e-5 away so the other factors cancel
    for (int i = 0; i < 60; ++i) {
      auto f = field_for(i);
      auto d = random_generic_datum(1 + i % 4, f, 40 + i);
      auto l = l_induced_pair(d, contragredient(d));
      auto ps = pole_set(l);
      std::vector<cplx> poles;
      for (const auto& pr : ps.progressions)
        for (int m = 0; m < 3; ++m) poles.push_back(pr.start - static_cast<double>(pr.step * m));
      for (const auto& z : ps.z_points) poles.push_back(z.s_representative(ps.q));
      for (const auto& p : poles)
        CHECK(std::abs(evaluate_lfactor(l, p + cplx(1e-9, 0.0))) > 1e3 * std::abs(evaluate_lfactor(l, p + cplx(1e-5, 0.0))));
    }
  }
}
