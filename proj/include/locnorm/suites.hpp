#pragma once

#include <locnorm/json_io.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace locnorm {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 0;    // number of data, 0 picks the suite default
  int max_n = 0;    // largest degree, 0 picks the suite default
  int samples = 0;  // samples per datum, 0 picks the suite default
};

struct SuiteResult {
  std::string name;
  std::string property;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  double max_error = 0.0;
  double elapsed_seconds = 0.0;
  std::vector<std::string> witnesses;  // first few failing cases
  std::vector<std::string> notes;
  json details = json::object();
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

json to_json(const SuiteResult& r);

}  // namespace locnorm
