#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stk/oracle.hpp"

namespace stk {

inline constexpr const char* kSuiteSchema = "stk-suite/1";

struct SuiteCase {
  std::string id;
  std::string kind;  // equality | membership | decomposition | chain | torsor | constants | order | roots | ring
  std::string paper_ref;
  std::string level = "image";  // requested: steinberg | image
  nlohmann::json body;          // the raw case object
};

struct OracleSpec {
  std::string mode = "matrix";  // matrix | enum | both
  std::string strategy = "symbolic";
  int seeds = 12;
};

struct Suite {
  std::string name;
  std::string system;  // e.g. "D4"
  RingSpec ring;
  OracleSpec oracle;
  std::vector<SuiteCase> cases;
};

// throws ParseError/ConfigError on schema violations
Suite parse_suite(const nlohmann::json& j);
Suite load_suite(const std::string& path);

struct CaseResult {
  std::string id;
  std::string verdict;  // pass | refuted | error | skipped
  std::string level;    // level achieved
  double elapsed_ms = 0;
  std::string details;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;  // sorted by id
  int count(const std::string& verdict) const;
  // 0 if nothing refuted or errored, 1 if refuted, 2 if any operational error
  int exit_code() const;
};

struct RunOptions {
  uint64_t seed = 1;
  int jobs = 1;
  bool timing = false;  // elapsed_ms in JSON output; off keeps reports byte-stable
};

Report run_suite(const Suite& s, const RunOptions& opt = {});
// one JSON object per case, then a summary object
std::string report_jsonl(const Report& r, bool timing);
std::string report_text(const Report& r);

// "A3", "D4", ... and a ring spec; builds the context
ContextPtr make_context(const std::string& system, const RingSpec& ring);

}  // namespace stk
