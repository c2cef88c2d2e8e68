#pragma once

#include "qpt/cslogic.hpp"
#include "qpt/pencil.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace qpt {

// exit statuses for run_pipeline and the CLI
enum ExitCode {
  kOk = 0,
  kUsageError = 1,
  kMissingInput = 2,
  kBudgetExhausted = 3,
  kConsistencyError = 4,
  kDomainError = 5,
};

// key = value per line, '#' comments
std::map<std::string, std::string> parse_config(const std::string& path);

struct PipelineOptions {
  bool include_timings = false;  // keep dossiers byte-identical by default
};

// Full pencil-of-quadrics dossier for one curve: quartic, invariants,
// Jacobian, singular members, base conics with solubility, vertex-line
// divisors, square-discriminant members with ruling verdicts, verdict.
nlohmann::json pencil_dossier(const std::string& label, const PencilCurve& curve, int genus,
                              long long height,
                              const std::optional<std::vector<Rat>>& base_point,
                              const PipelineOptions& opts = {});

// evidence bundle JSON <-> struct
EvidenceBundle bundle_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const VerdictRecord& v);

// Executes the stages requested by a config file and writes one dossier
// per label into the output directory. Returns an ExitCode.
int run_pipeline(const std::string& config_path, std::string* error_message = nullptr);

// per-genus and per-rule tallies as CSV
std::string emit_tables(const std::vector<VerdictRecord>& dossiers);

}  // namespace qpt
