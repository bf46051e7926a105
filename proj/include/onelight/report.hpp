#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace onelight {

// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kHypothesisUnmet = 2;
inline constexpr int kCounterexampleCandidate = 3;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
}  // namespace exit_code

struct WitnessSummary {
  int u = 0, v = 0;
  int degree_u = 0, degree_v = 0;
  std::string type;

  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

struct ValidationSummary {
  bool valid = false;
  std::vector<std::string> violations;
  std::vector<std::string> diagnostics;

  friend bool operator==(const ValidationSummary&, const ValidationSummary&) = default;
};

struct VerdictSummary {
  std::string kind;  // WITNESS, HYPOTHESIS-UNMET, COUNTEREXAMPLE-CANDIDATE
  std::string profile;
  int min_degree = 0;
  std::optional<WitnessSummary> witness;

  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

struct OriginalSummary {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<int, int> degrees;

  friend bool operator==(const OriginalSummary&, const OriginalSummary&) = default;
};

struct ChargeSummary {
  std::string initial_total;
  std::string final_total;
  bool conserved = false;
  std::size_t transfers = 0;
  std::map<std::string, std::size_t> per_rule;

  friend bool operator==(const ChargeSummary&, const ChargeSummary&) = default;
};

struct ClaimSummary {
  std::string name;
  std::size_t gated = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

struct AuditSummary {
  bool conserved = false;
  bool ledger_consistent = false;
  std::vector<ClaimSummary> claims;
  std::vector<std::string> negative;
  std::size_t doubly_special_faces = 0;
  bool light_edge_free = false;

  friend bool operator==(const AuditSummary&, const AuditSummary&) = default;
};

struct RunReport {
  std::string command;
  std::string input;
  std::optional<ValidationSummary> validation;
  std::optional<VerdictSummary> verdict;
  std::optional<OriginalSummary> original;
  std::optional<std::vector<WitnessSummary>> light_edges;
  std::optional<ChargeSummary> charges;
  std::optional<AuditSummary> audit;

  // Invalid input beats the theorem verdict; reports without either exit 0.
  int exit_code() const;

  nlohmann::ordered_json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
  std::string to_text() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Full command-line behavior; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onelight
