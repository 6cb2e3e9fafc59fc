#pragma once

#include <locnorm/combinatorics.hpp>
#include <locnorm/eps_conductor.hpp>
#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace locnorm {

// Rank-one factor  L(w, a x b~) / (L(1+w, a x b~) eps(w, a x b~)).
struct PairFactor {
  IndexPair pair;
  LFactorDescriptor l;
  std::vector<EpsilonTerm> eps;

  cplx evaluate(cplx w) const;
  // Same with eps(0) in place of eps(w).
  cplx evaluate_centered(cplx w) const;
  // eps(0) / eps(w)
  cplx epsilon_ratio(cplx w) const;
  int conductor() const { return total_conductor(eps); }
  // Distance from w to the nearest pole of L(w) or zero of 1/L(1+w).
  double distance_to_singularity(cplx w) const;
};

struct NormalizingFactor {
  LocalField field;
  int rank = 0;
  CrossedPairSet crossed;
  std::vector<PairFactor> factors;  // one per crossed pair, same order

  cplx evaluate(std::span<const cplx> s) const;
  cplx evaluate_centered(std::span<const cplx> s) const;
  double distance_to_singularity(std::span<const cplx> s) const;
};

// prod over crossed pairs of q^{(s_i - s_j) f_ij}; constant 1 if archimedean.
struct MonomialRatio {
  int q = 0;
  std::vector<std::pair<IndexPair, int>> exponents;

  bool constant() const;
  cplx evaluate(std::span<const cplx> s) const;
};

PairFactor rank_one_normalizer(const InducedDatum& a, const InducedDatum& b, const ConductorModel& model = {});
PairFactor rank_one_normalizer(const LocalField& field, const Block& a, const Block& b,
                               const ConductorModel& model = {});

NormalizingFactor normalizing_factor(const ParabolicChart& from, const ParabolicChart& to, const LeviDatum& pi,
                                     const ConductorModel& model = {});
NormalizingFactor normalizing_factor(const ParabolicChart& from, const ParabolicChart& to, const InducedDatum& pi,
                                     const ConductorModel& model = {});

MonomialRatio epsilon_centering_ratio(const NormalizingFactor& nf);

struct CheckReport {
  std::string property;
  bool passed = false;
  double max_error = 0.0;
  int samples_used = 0;
  int skipped = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

// mu(s) conj(r(-conj s)) r(s) = 1 for the centred normalization of a
// tempered nonarchimedean pair, sampled at s = i u.
CheckReport plancherel_check(const InducedDatum& pi1, const InducedDatum& pi2, std::span<const double> imag_parts,
                             double tol = 1e-9, const ConductorModel& model = {}, double pole_margin = 1e-4);

// Splits every block of every component into its own component with zero
// exponent; returns the flattened datum and the removed exponents.
struct ExponentSplit {
  LeviDatum flat;
  Flattening map;
  std::vector<ExactReal> exponents;
};
ExponentSplit split_exponents(const LeviDatum& pi);

// Compares the normalizing factor of pi on the coarse charts with the factor
// of the flattened datum on the lifted charts at s + exponents.
CheckReport induction_stages_check(const LeviDatum& pi, const ParabolicChart& from, const ParabolicChart& to,
                                   const std::vector<std::vector<cplx>>& samples, double tol = 1e-9,
                                   const ConductorModel& model = {}, double pole_margin = 1e-4);

struct HolomorphyVerdict {
  ExactReal guaranteed_margin;  // 1 - 2 max|s|
  ExactReal required_margin;    // 2 / (1 + n^2)
  ExactReal max_exponent;
  int n = 0;
  bool certified = false;
};

HolomorphyVerdict holomorphy_region(const LeviDatum& pi, int n = 0);
HolomorphyVerdict holomorphy_region(const InducedDatum& pi, int n = 0);

std::vector<std::vector<cplx>> random_samples(int rank, int count, std::uint64_t seed, double re_half_width = 0.3,
                                              double im_half_width = 4.0);

}  // namespace locnorm
