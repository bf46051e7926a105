#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onelight/discharging.hpp"

namespace onelight {

// One transfer as `rule;source;target;via;num/den`, via "-" when absent.
std::string ledger_line(const Transfer& t);

// Fields of a ledger line. Corner slot and residual flag are not part of the
// line format.
struct LedgerRecord {
  Rule rule;
  Element source;
  Element target;
  std::optional<VertexId> via;
  Charge amount;
};

// Throws std::invalid_argument on malformed lines.
LedgerRecord parse_ledger_line(std::string_view line);

// Canonically ordered, newline-terminated lines.
std::string export_ledger(std::vector<Transfer> ledger);

}  // namespace onelight
