#pragma once

#include <locnorm/gamma.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/rational.hpp>

#include <span>
#include <vector>

namespace locnorm {

// W q^{(1/2 - s) f_total} with f_total = n1 n2 c(psi) + f. Constant W over
// archimedean fields.
struct EpsilonFactor {
  LocalField field;
  cplx root_number{1.0, 0.0};
  int conductor = 0;
  int psi_term = 0;

  int total_conductor() const { return conductor + psi_term; }
  cplx evaluate(cplx s) const;
  // eps(0) / eps(s)
  cplx ratio_to_center(cplx s) const;
  EpsilonFactor dual() const;
};

EpsilonFactor epsilon_factor(const LocalField& field, int f, cplx root_number, int c_psi, int n1, int n2);

struct ConductorInterval {
  int lo = 0;
  int hi = 0;
  // A common twist making both factors unramified is not excluded.
  bool zero_permissible = false;
};

ConductorInterval conductor_bound_interval(int n1, int f1, int n2, int f2);
int conductor_additivity(std::span<const int> parts);

// Conductor exponent of a square-integrable block (0 over archimedean fields).
int block_conductor(const SquareIntegrableBlock& b);
int datum_conductor(const InducedDatum& d);

// How pair conductors f(sigma1 x sigma2) are assigned to square-integrable
// constituents.
struct ConductorModel {
  enum class Kind { ceiling, zero };
  Kind kind = Kind::ceiling;
  cplx root_number{1.0, 0.0};

  int pair_conductor(const SquareIntegrableBlock& a, const SquareIntegrableBlock& b) const;
};

// One constituent factor of a product of epsilon factors: eps(s + shift).
struct EpsilonTerm {
  EpsilonFactor factor;
  ExactReal shift;
  cplx evaluate(cplx s) const { return factor.evaluate(s + shift.value()); }
};

// eps(s, d1 x d2) as the product over square-integrable constituents.
std::vector<EpsilonTerm> pair_epsilon(const InducedDatum& d1, const InducedDatum& d2, const ConductorModel& model);

cplx evaluate_epsilon(std::span<const EpsilonTerm> terms, cplx s);
int total_conductor(std::span<const EpsilonTerm> terms);

}  // namespace locnorm
