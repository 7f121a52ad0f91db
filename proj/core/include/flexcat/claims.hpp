#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flexcat::claims {

enum class ClaimStatus { pass, fail, evidence_only };

std::string_view to_string(ClaimStatus s);
ClaimStatus parse_claim_status(std::string_view s);

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::fail;
  std::string summary;
  /// Witness data; enough to re-run every check through reverify().
  nlohmann::json details;
  std::optional<std::string> paper_note;
  double runtime_seconds = 0.0;
};

ClaimReport verify_pm_omega();
ClaimReport verify_advantage();
ClaimReport verify_locc_positive();
ClaimReport verify_no_unique_factorisation();
ClaimReport verify_anyposint(const std::vector<unsigned>& ns);
ClaimReport verify_arbnumreq(const std::vector<unsigned>& ns);
/// Bounded essential-positivity scans of the two candidate pairs.
ClaimReport scan_open_question(unsigned univariate_n_max, unsigned bivariate_n_max);

struct BenchConfig {
  std::vector<unsigned> anyposint_ns{2, 3, 4, 5};
  std::vector<unsigned> arbnumreq_ns{2, 3};
  unsigned scan_univariate = 100;
  unsigned scan_bivariate = 50;
  /// Claim ids to run; empty runs everything.
  std::vector<std::string> only;
};

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();

/// Runs the selected verifiers in claim_ids() order. Unknown ids in
/// config.only throw invalid_argument.
std::vector<ClaimReport> run_all(const BenchConfig& config = {});

/// True iff no report has status fail.
bool all_passed(const std::vector<ClaimReport>& reports);

nlohmann::json to_json(const ClaimReport& r, bool with_timing = false);
nlohmann::json to_json(const std::vector<ClaimReport>& rs, bool with_timing = false);
ClaimReport report_from_json(const nlohmann::json& j);

std::string render_table(const std::vector<ClaimReport>& reports, bool with_timing = false);

/// Recomputes a report's status from its serialized details alone.
ClaimStatus reverify(const nlohmann::json& report);

}  // namespace flexcat::claims
