#include "onelight/ledger.hpp"

#include <stdexcept>

namespace onelight {

std::string ledger_line(const Transfer& t) {
  std::string line = to_string(t.rule);
  line += ';';
  line += to_string(t.source);
  line += ';';
  line += to_string(t.target);
  line += ';';
  line += t.via ? to_string(Element::vertex(*t.via)) : "-";
  line += ';';
  line += format_charge(t.amount);
  return line;
}

LedgerRecord parse_ledger_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto semi = line.find(';', start);
    fields.push_back(line.substr(start, semi == std::string_view::npos ? semi : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const std::string bad = "malformed ledger line: " + std::string(line);
  if (fields.size() != 5) throw std::invalid_argument(bad);

  auto rule = parse_rule(fields[0]);
  auto source = parse_element(fields[1]);
  auto target = parse_element(fields[2]);
  if (!rule || !source || !target) throw std::invalid_argument(bad);
  std::optional<VertexId> via;
  if (fields[3] != "-") {
    auto v = parse_element(fields[3]);
    if (!v || !v->is_vertex()) throw std::invalid_argument(bad);
    via = v->id;
  }
  return {*rule, *source, *target, via, parse_charge(std::string(fields[4]))};
}

std::string export_ledger(std::vector<Transfer> ledger) {
  sort_ledger(ledger);
  std::string out;
  for (const auto& t : ledger) {
    out += ledger_line(t);
    out += '\n';
  }
  return out;
}

}  // namespace onelight
