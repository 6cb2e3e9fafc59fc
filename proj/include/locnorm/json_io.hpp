#pragma once

#include <locnorm/bounds.hpp>
#include <locnorm/combinatorics.hpp>
#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/normalization.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace locnorm {

using json = nlohmann::ordered_json;

inline constexpr const char* kInducedDatumSchema = "locnorm/induced-datum@1";
inline constexpr const char* kLeviDatumSchema = "locnorm/levi-datum@1";

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses text, reporting the byte offset of any syntax error.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

json to_json(const cplx& z);
cplx complex_from_json(const json& j);

json to_json(const LocalField& f);
json to_json(const SquareIntegrableBlock& b);
json to_json(const Unit& u);
json to_json(const InducedDatum& d);
json to_json(const LeviDatum& d);
json to_json(const ParabolicChart& c);
json to_json(const LFactorDescriptor& l);
json to_json(const PoleSet& p);
json to_json(const BoundCertificate& c);
json to_json(const CheckReport& r);
json to_json(const HolomorphyVerdict& v);
json to_json(const ExactReal& x);

LocalField field_from_json(const json& j);
SquareIntegrableBlock block_from_json(const json& j);
Unit unit_from_json(const json& j);
InducedDatum datum_from_json(const json& j);
// Accepts a Levi datum, or an induced datum taken as a single Levi factor.
LeviDatum levi_from_json(const json& j);
ParabolicChart chart_from_json(const json& j);
DiscRationalDescriptor disc_descriptor_from_json(const json& j);
StripFunctionDescriptor strip_descriptor_from_json(const json& j);
StripRational strip_rational_from_json(const json& j);
UniformNonarchInput uniform_input_from_json(const json& j);

}  // namespace locnorm
