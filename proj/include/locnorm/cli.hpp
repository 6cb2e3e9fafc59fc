#pragma once

#include <locnorm/gamma.hpp>
#include <locnorm/json_io.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace locnorm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

inline constexpr const char* kConfigEnv = "LOCNORM_CONFIG";

struct RunConfig {
  enum class Format { json, pretty };

  int q = 3;  // residue field size when the command builds its own field
  int c_psi = 0;
  cplx root_number{1.0, 0.0};
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances = {{"plancherel", 1e-9}, {"stages", 1e-9}, {"pole", 1e-13}};
  int samples = 50;
  Format format = Format::json;

  double tolerance(const std::string& key) const;
};

// Overlays the fields present in j onto cfg; rejects non-positive tolerances.
void apply_config(RunConfig& cfg, const json& j);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locnorm
