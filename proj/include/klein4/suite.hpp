#pragma once

#include <string>
#include <vector>

#include "klein4/construct.hpp"
#include "klein4/gb.hpp"
#include "klein4/oracle.hpp"
#include "klein4/sagbi.hpp"

namespace klein4 {

inline const char* kVersion = "klein4 0.1.0";

struct SuiteConfig {
  std::string rep_selector;
  std::string suite = "all";  // leadterms | identities | hsop | hilbert |
                              // transfer | lemmas | noether | sagbi | all
  int degree_bound = 0;       // 0 = per-representation default
  std::string lambda_text;    // substituted into Vm selectors lacking lambda=
  int budget = 0;             // sweep budget for the sagbi completion; 0 = default
  std::string out_path;       // empty = stdout
  std::string format = "json";
};

struct Claim {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string witness;  // failure detail or verification bound
};

struct Report {
  std::string version;
  std::string rep_selector;
  std::string suite;
  int degree_bound = 0;
  int budget = 0;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, double>> timings_ms;  // excluded from fixtures
  bool all_pass() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

// Applies the per-field dimension ceiling used by the suites to an oracle.
void apply_dimension_policy(Oracle& oracle);
// Largest degree whose monomial count fits the policy ceiling.
int feasible_degree_cap(const Representation& rep, int wanted);

Report run_suite(const SuiteConfig& config);

// JSON array of {family, name, degree, leadTerm, text} for the named
// constructions of a representation.
std::string registry_json(const Representation& rep);

std::string report_to_json(const Report& report, bool include_timings = true);
std::string report_to_text(const Report& report);
// Atomic write (temp file + rename).
void write_report(const Report& report, const SuiteConfig& config);

}  // namespace klein4
