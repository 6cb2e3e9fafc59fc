#pragma once

#include <locnorm/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace locnorm {

class InvariantViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { real, complex, nonarch };

struct LocalField {
  FieldKind kind = FieldKind::real;
  int q = 0;              // residue field size, nonarch only
  int psi_conductor = 0;  // conductor exponent of the additive character

  static LocalField real() { return {FieldKind::real, 0, 0}; }
  static LocalField complex() { return {FieldKind::complex, 0, 0}; }
  static LocalField nonarch(int q, int c_psi = 0);

  bool archimedean() const { return kind != FieldKind::nonarch; }
  friend bool operator==(const LocalField&, const LocalField&) = default;
};

std::string to_string(const LocalField& f);

// Opaque supercuspidal of GL_degree. twist_order a is the number of
// unramified twists fixing it (a divides degree); `twist` is a real
// unramified exponent |det|^twist.
struct SupercuspidalStandIn {
  int degree = 1;
  int twist_order = 1;
  int conductor = 0;
  std::string class_id = "1";
  bool self_dual = true;
  double twist = 0.0;

  SupercuspidalStandIn dual() const;
  std::string dual_class_id() const;
  // Same representation up to an unramified twist.
  bool same_twist_class(const SupercuspidalStandIn& o) const;
  friend bool operator==(const SupercuspidalStandIn&, const SupercuspidalStandIn&) = default;
};

struct RealDS {  // discrete series D_k of GL_2(R)
  int k = 2;
  double twist = 0.0;
  friend bool operator==(const RealDS&, const RealDS&) = default;
};

struct RealChar {  // sgn^eps |.|^twist on GL_1(R)
  int eps = 0;
  double twist = 0.0;
  friend bool operator==(const RealChar&, const RealChar&) = default;
};

struct ComplexChar {  // (z/|z|)^r |z|_C^twist on GL_1(C)
  int r = 0;
  double twist = 0.0;
  friend bool operator==(const ComplexChar&, const ComplexChar&) = default;
};

struct Segment {  // generalized Steinberg on the centred segment of length `length`
  int length = 1;
  SupercuspidalStandIn cusp;
  friend bool operator==(const Segment&, const Segment&) = default;
};

using SquareIntegrableBlock = std::variant<RealDS, RealChar, ComplexChar, Segment>;

struct SpehBlock {
  SquareIntegrableBlock delta;
  int k = 1;
  friend bool operator==(const SpehBlock&, const SpehBlock&) = default;
};

using Unit = std::variant<SquareIntegrableBlock, SpehBlock>;

struct Block {
  Unit unit;
  double shift = 0.0;
  friend bool operator==(const Block&, const Block&) = default;
};

enum class Flavor { generic, discrete_local, tempered };

std::string to_string(Flavor f);

struct InducedDatum {
  LocalField field;
  std::vector<Block> blocks;
  Flavor flavor = Flavor::generic;
  // discrete_local only: allow Speh blocks with different k.
  bool mixed_k = false;
  friend bool operator==(const InducedDatum&, const InducedDatum&) = default;
};

// Representation of a Levi GL_{n_1} x ... x GL_{n_r}: one datum per factor.
struct LeviDatum {
  LocalField field;
  std::vector<InducedDatum> components;
  friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
};

LeviDatum as_levi(const InducedDatum& d);  // one component per block

int degree(const SquareIntegrableBlock& b);
int degree(const Unit& u);
int degree(const InducedDatum& d);
int degree(const LeviDatum& d);

double twist(const SquareIntegrableBlock& b);
SquareIntegrableBlock with_twist(const SquareIntegrableBlock& b, double t);
const SquareIntegrableBlock& square_integrable_part(const Unit& u);
int speh_k(const Unit& u);  // 1 for square-integrable units

SquareIntegrableBlock dual(const SquareIntegrableBlock& b);
Unit dual(const Unit& u);

bool legal_for(const LocalField& f, const SquareIntegrableBlock& b);
std::string describe(const SquareIntegrableBlock& b);
std::string describe(const Unit& u);

// Moves every block twist into the block shift and stably re-sorts blocks by
// decreasing shift. Exact shifts are kept exact.
InducedDatum canonicalize(const InducedDatum& d);

std::vector<std::string> invariant_violations(const InducedDatum& d);
void require_valid(const InducedDatum& d);

InducedDatum contragredient(const InducedDatum& d);
LeviDatum contragredient(const LeviDatum& d);

struct HermitianCheck {
  bool symmetric = false;
  std::vector<int> partner;  // partner[j] = k with (unit_j, s_j) == (unit_k, -s_k)
};

HermitianCheck check_hermitian_symmetry(const InducedDatum& d, double tol = 1e-12);

double lrs_bound(int n);
Rational lrs_bound_exact(int n);

std::vector<double> residual_parameters(int k, std::span<const double> s);

InducedDatum residual_local_component(int k, const InducedDatum& cuspidal);

// Speh block J(delta,k)[s] seen as the segment of exponents [a,b] of delta.
struct SpehTriple {
  SquareIntegrableBlock delta;
  double a = 0.0;
  double b = 0.0;
};

SpehTriple speh_triple(const SpehBlock& b, double shift);
bool linked_segments(const SpehTriple& x, const SpehTriple& y, double tol = 1e-12);
// For linked triples: the one with the larger centre exceeds the other by at
// least one at both ends.
bool linked_ends_separated(const SpehTriple& x, const SpehTriple& y, double tol = 1e-12);

// Square-integrable constituents of the standard module, twists folded in.
struct Constituent {
  SquareIntegrableBlock unit;
  ExactReal shift;
};

std::vector<Constituent> expand_constituents(const InducedDatum& d);
std::vector<ExactReal> canonical_shifts(const InducedDatum& d);

struct GeneratorOptions {
  double margin = 1e-3;
  std::optional<bool> common_k;  // unset: seed decides
  int conductor_cap = 4;
  int shift_denominator = 10000;
};

InducedDatum random_discrete_datum(int n, const LocalField& field, std::uint64_t seed,
                                   const GeneratorOptions& opts = {});
InducedDatum random_generic_datum(int n, const LocalField& field, std::uint64_t seed,
                                  const GeneratorOptions& opts = {});
InducedDatum random_tempered_datum(int n, const LocalField& field, std::uint64_t seed,
                                   const GeneratorOptions& opts = {});
LeviDatum random_levi_datum(int n, const LocalField& field, std::uint64_t seed, const GeneratorOptions& opts = {});

}  // namespace locnorm
