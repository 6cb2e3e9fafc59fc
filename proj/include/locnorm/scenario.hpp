#pragma once

#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/rational.hpp>

#include <string>
#include <vector>

namespace locnorm {

// GL_2 x GL_2 inside GL_4 over R with sigma = I(|.|^mu, |.|^-mu) spherical.
struct Gl4PrincipalSeries {
  double mu = 0.0;
  InducedDatum sigma;
  LFactorDescriptor l;  // L(s, sigma x sigma~)
  ExactReal rightmost_pole;
  // |s| at which the normalized operator first acquires a pole, s1 = -s2 = s.
  ExactReal pole_threshold;
  ExactReal holomorphy_guarantee;  // 1/(n^2+1) with n = 4
  bool near_axis = false;
  std::vector<std::string> notes;
};

Gl4PrincipalSeries gl4_principal_series(double mu);

}  // namespace locnorm
