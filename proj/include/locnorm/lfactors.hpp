#pragma once

#include <locnorm/gamma.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locnorm {

class PoleProximityError : public std::domain_error {
 public:
  PoleProximityError(const std::string& what, double distance) : std::domain_error(what), distance_(distance) {}
  double distance() const { return distance_; }

 private:
  double distance_;
};

enum class GammaKind { real, complex };

// Gamma_R(s + shift) or Gamma_C(s + shift).
struct GammaAtom {
  GammaKind kind = GammaKind::real;
  cplx shift{0.0, 0.0};
  friend bool operator==(const GammaAtom&, const GammaAtom&) = default;
};

// (1 - alpha z^period)^{-1} with z = q^{-s} and alpha = q^{-decay} e^{2 pi i turns}.
struct PAdicAtom {
  ExactReal decay;
  ExactReal turns;
  int period = 1;

  cplx inverse_root(int q) const;
  static PAdicAtom from_inverse_root(cplx alpha, int period, int q);
};

class LFactorDescriptor {
 public:
  LFactorDescriptor() = default;
  explicit LFactorDescriptor(LocalField field) : field_(field) {}

  const LocalField& field() const { return field_; }
  const std::vector<GammaAtom>& gamma_atoms() const { return gamma_; }
  const std::vector<PAdicAtom>& padic_atoms() const { return padic_; }
  std::size_t size() const { return gamma_.size() + padic_.size(); }
  bool trivial() const { return size() == 0; }

  void add(const GammaAtom& a);
  void add(const PAdicAtom& a);
  void append(const LFactorDescriptor& o);

  // Descriptor of s -> L(s + t).
  LFactorDescriptor shifted(const ExactReal& t) const;

  std::string pretty() const;

 private:
  LocalField field_;
  std::vector<GammaAtom> gamma_;
  std::vector<PAdicAtom> padic_;
};

// Archimedean pole progression start - step*m, m >= 0.
struct ArchProgression {
  cplx start;
  int step = 1;
  int multiplicity = 1;
};

// Root of 1 - alpha z^a: z = q^{log_modulus} e^{2 pi i turns}.
struct ZPoint {
  ExactReal log_modulus;
  ExactReal turns;
  int multiplicity = 1;

  cplx z(int q) const;
  cplx s_representative(int q) const;  // a preimage under z = q^{-s}
};

struct PoleSet {
  std::vector<ArchProgression> progressions;
  std::vector<ZPoint> z_points;
  int q = 0;
  bool empty() const { return progressions.empty() && z_points.empty(); }
};

LFactorDescriptor l_square_integrable_pair(const LocalField& field, const SquareIntegrableBlock& b1,
                                           const SquareIntegrableBlock& b2);

// L(s, d1 x d2) by multiplicativity over the square-integrable constituents.
LFactorDescriptor l_induced_pair(const InducedDatum& d1, const InducedDatum& d2);

PoleSet pole_set(const LFactorDescriptor& l);

std::optional<ExactReal> rightmost_real_pole(const LFactorDescriptor& l);

double distance_to_pole(const LFactorDescriptor& l, cplx s);

cplx evaluate_lfactor(const LFactorDescriptor& l, cplx s, double pole_tolerance = 1e-13);
cplx evaluate_inverse_lfactor(const LFactorDescriptor& l, cplx s);

// Multiset equality of atoms up to tol.
bool same_atoms(const LFactorDescriptor& a, const LFactorDescriptor& b, double tol = 1e-12);

std::string format_real(double x);

}  // namespace locnorm
