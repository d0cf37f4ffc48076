#pragma once

#include "starkit/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace starkit {

// Schema violations and invalid parameters; the CLI maps these to exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

extern const std::vector<std::string> kVerbs;

struct CaseResult {
  std::string id;
  std::string verb;
  Json config;  // normalized, defaults filled in
  std::vector<CheckRecord> checks;
  bool degenerate = false;
};

// Fills defaults and rejects unknown fields; throws ConfigError.
Json normalize_case(const std::string& verb, const Json& raw);
CaseResult run_case(const std::string& verb, const Json& config);

// A config is either one case or {"cases":[...]}; each case may name its verb.
std::vector<Json> expand_config(const Json& config);

struct BatchResult {
  std::vector<CaseResult> cases;  // ordered by id
  int exit_code = 0;
};

BatchResult run_batch(const std::string& verb, const std::vector<Json>& cases);
// exit 0 all pass, 2 any fail, 3 only degenerate cases
int exit_code_of(const std::vector<CaseResult>& cases);
// deterministic body, free of timings
Json report_body(const std::string& verb, const BatchResult& b);

}  // namespace starkit
