#include <locnorm/scenario.hpp>

#include <stdexcept>

namespace locnorm {

Gl4PrincipalSeries gl4_principal_series(double mu) {
  if (!(mu >= 0.0 && mu < 0.5)) throw std::invalid_argument("mu must satisfy 0 <= mu < 1/2");
  Gl4PrincipalSeries out;
  out.mu = mu;
  out.sigma = InducedDatum{LocalField::real(), {{RealChar{0, 0.0}, mu}, {RealChar{0, 0.0}, -mu}}, Flavor::generic, false};
  require_valid(out.sigma);
  out.l = l_induced_pair(out.sigma, contragredient(out.sigma));
  auto pole = rightmost_real_pole(out.l);
  if (!pole) throw std::logic_error("L(s, sigma x sigma~) has no real pole");
  out.rightmost_pole = *pole;
  // r(w) = L(w)/L(1+w) with w = 2s vanishes first at w = pole - 1.
  out.pole_threshold = (ExactReal(1) - out.rightmost_pole) / ExactReal(2);
  out.holomorphy_guarantee = ExactReal(Rational(1, 17));
  out.near_axis = compare(out.pole_threshold, out.holomorphy_guarantee, 0.0) < 0;
  out.notes = {
      "induced character exponents taken as (mu+s, -mu+s, mu-s, -mu-s)",
      "normalizing factor in w = s1 - s2 = 2s is L(w, sigma x sigma~) / L(1+w, sigma x sigma~)",
      "near_axis compares the pole threshold with the guaranteed half-width 1/(n^2+1) for n = 4",
  };
  return out;
}

}  // namespace locnorm
