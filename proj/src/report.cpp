#include "onelight/report.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "onelight/audit.hpp"
#include "onelight/discharging.hpp"
#include "onelight/generators.hpp"
#include "onelight/graph_io.hpp"
#include "onelight/ledger.hpp"
#include "onelight/lightedge.hpp"

namespace onelight {

using nlohmann::json;
using nlohmann::ordered_json;

int RunReport::exit_code() const {
  if (validation && !validation->valid) return exit_code::kInvalidInput;
  if (verdict) {
    if (verdict->kind == to_string(VerdictKind::HypothesisUnmet)) return exit_code::kHypothesisUnmet;
    if (verdict->kind == to_string(VerdictKind::CounterexampleCandidate)) return exit_code::kCounterexampleCandidate;
  }
  return exit_code::kOk;
}

namespace {

ordered_json witness_json(const WitnessSummary& w) {
  ordered_json j;
  j["u"] = w.u;
  j["v"] = w.v;
  j["degrees"] = {w.degree_u, w.degree_v};
  j["type"] = w.type;
  return j;
}

WitnessSummary witness_from(const json& j) {
  return {j.at("u").get<int>(), j.at("v").get<int>(), j.at("degrees").at(0).get<int>(),
          j.at("degrees").at(1).get<int>(), j.at("type").get<std::string>()};
}

WitnessSummary summarize(const LightEdgeWitness& w) {
  return {w.u, w.v, w.degree_u, w.degree_v, to_string(w.type)};
}

}  // namespace

ordered_json RunReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["input"] = input;
  if (validation) {
    ordered_json v;
    v["valid"] = validation->valid;
    v["violations"] = validation->violations;
    v["diagnostics"] = validation->diagnostics;
    j["validation"] = v;
  }
  if (verdict) {
    ordered_json v;
    v["kind"] = verdict->kind;
    v["profile"] = verdict->profile;
    v["min_degree"] = verdict->min_degree;
    v["witness"] = verdict->witness ? witness_json(*verdict->witness) : ordered_json(nullptr);
    j["verdict"] = v;
  }
  if (original) {
    ordered_json o;
    o["vertices"] = original->vertices;
    o["edges"] = ordered_json::array();
    for (auto [u, v] : original->edges) o["edges"].push_back({u, v});
    o["degrees"] = ordered_json::array();
    for (auto [v, d] : original->degrees) o["degrees"].push_back({v, d});
    j["original"] = o;
  }
  if (light_edges) {
    j["light_edges"] = ordered_json::array();
    for (const auto& w : *light_edges) j["light_edges"].push_back(witness_json(w));
  }
  if (charges) {
    ordered_json c;
    c["initial_total"] = charges->initial_total;
    c["final_total"] = charges->final_total;
    c["conserved"] = charges->conserved;
    c["transfers"] = charges->transfers;
    c["per_rule"] = ordered_json::object();
    for (const auto& [rule, count] : charges->per_rule) c["per_rule"][rule] = count;
    j["charges"] = c;
  }
  if (audit) {
    ordered_json a;
    a["conserved"] = audit->conserved;
    a["ledger_consistent"] = audit->ledger_consistent;
    a["claims"] = ordered_json::array();
    for (const auto& c : audit->claims) {
      ordered_json row;
      row["name"] = c.name;
      row["gated"] = c.gated;
      row["passed"] = c.passed;
      row["failures"] = c.failures;
      a["claims"].push_back(row);
    }
    a["negative"] = audit->negative;
    a["doubly_special_faces"] = audit->doubly_special_faces;
    a["light_edge_free"] = audit->light_edge_free;
    j["audit"] = a;
  }
  j["exit_code"] = exit_code();
  return j;
}

RunReport RunReport::from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  if (j.contains("validation")) {
    const json& v = j["validation"];
    r.validation = ValidationSummary{v.at("valid").get<bool>(), v.at("violations").get<std::vector<std::string>>(),
                                     v.at("diagnostics").get<std::vector<std::string>>()};
  }
  if (j.contains("verdict")) {
    const json& v = j["verdict"];
    VerdictSummary s{v.at("kind").get<std::string>(), v.at("profile").get<std::string>(),
                     v.at("min_degree").get<int>(), std::nullopt};
    if (!v.at("witness").is_null()) s.witness = witness_from(v["witness"]);
    r.verdict = s;
  }
  if (j.contains("original")) {
    const json& o = j["original"];
    OriginalSummary s;
    s.vertices = o.at("vertices").get<int>();
    for (const auto& e : o.at("edges")) s.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& d : o.at("degrees")) s.degrees[d.at(0).get<int>()] = d.at(1).get<int>();
    r.original = s;
  }
  if (j.contains("light_edges")) {
    std::vector<WitnessSummary> ws;
    for (const auto& w : j["light_edges"]) ws.push_back(witness_from(w));
    r.light_edges = ws;
  }
  if (j.contains("charges")) {
    const json& c = j["charges"];
    ChargeSummary s{c.at("initial_total").get<std::string>(), c.at("final_total").get<std::string>(),
                    c.at("conserved").get<bool>(), c.at("transfers").get<std::size_t>(), {}};
    for (const auto& [rule, count] : c.at("per_rule").items()) s.per_rule[rule] = count.get<std::size_t>();
    r.charges = s;
  }
  if (j.contains("audit")) {
    const json& a = j["audit"];
    AuditSummary s;
    s.conserved = a.at("conserved").get<bool>();
    s.ledger_consistent = a.at("ledger_consistent").get<bool>();
    for (const auto& row : a.at("claims"))
      s.claims.push_back({row.at("name").get<std::string>(), row.at("gated").get<std::size_t>(),
                          row.at("passed").get<std::size_t>(), row.at("failures").get<std::vector<std::string>>()});
    s.negative = a.at("negative").get<std::vector<std::string>>();
    s.doubly_special_faces = a.at("doubly_special_faces").get<std::size_t>();
    s.light_edge_free = a.at("light_edge_free").get<bool>();
    r.audit = s;
  }
  return r;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "input: " << input << "\n";
  if (validation) {
    os << "validation: " << (validation->valid ? "valid" : "INVALID") << "\n";
    for (const auto& v : validation->violations) os << "  violation: " << v << "\n";
    for (const auto& d : validation->diagnostics) os << "  diagnostic: " << d << "\n";
  }
  if (original) {
    os << "original graph: " << original->vertices << " vertices, " << original->edges.size() << " edges\n";
    for (auto [u, v] : original->edges) os << "  " << u << " " << v << "\n";
    os << "degrees:";
    for (auto [v, d] : original->degrees) os << " " << v << ":" << d;
    os << "\n";
  }
  if (verdict) {
    os << "verdict: " << verdict->kind << " (profile " << verdict->profile << ", min degree "
       << verdict->min_degree << ")";
    if (verdict->witness) {
      const auto& w = *verdict->witness;
      os << " edge " << w.u << "-" << w.v << " degrees (" << w.degree_u << "," << w.degree_v << ") type " << w.type;
    }
    os << "\n";
  }
  if (light_edges) {
    os << "light edges: " << light_edges->size() << "\n";
    for (const auto& w : *light_edges)
      os << "  " << w.type << " " << w.u << "-" << w.v << " (" << w.degree_u << "," << w.degree_v << ")\n";
  }
  if (charges) {
    os << "initial total: " << charges->initial_total << "\n";
    os << "final total: " << charges->final_total << "\n";
    os << "conserved: " << (charges->conserved ? "true" : "false") << "\n";
    os << "transfers: " << charges->transfers << "\n";
    for (const auto& [rule, count] : charges->per_rule) os << "  " << rule << ": " << count << "\n";
  }
  if (audit) {
    os << "audit: conserved=" << (audit->conserved ? "true" : "false")
       << " ledger_consistent=" << (audit->ledger_consistent ? "true" : "false") << "\n";
    for (const auto& c : audit->claims) {
      os << "  " << (c.gated == c.passed ? "PASS" : "FAIL") << " " << c.name << ": " << c.passed << "/" << c.gated
         << " gated instances hold\n";
      for (const auto& f : c.failures) os << "    " << f << "\n";
    }
    os << "  negative elements:";
    if (audit->negative.empty()) os << " none";
    for (const auto& x : audit->negative) os << " " << x;
    os << "\n";
    os << "  doubly special faces: " << audit->doubly_special_faces << "\n";
    os << "  light-edge free: " << (audit->light_edge_free ? "true" : "false") << "\n";
  }
  os << "exit code: " << exit_code() << "\n";
  return os.str();
}

namespace {

// Raised for unreadable or unparsable input; exit 65.
struct DataError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{"cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw DataError{"cannot write " + path};
}

// Either a loaded graph or the reason it could not be embedded.
struct Loaded {
  std::optional<AssociatedPlaneGraph> graph;
  std::string embedding_error;
};

Loaded load(const std::string& input) {
  const std::string prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) {
    try {
      return {catalog(input.substr(prefix.size())), {}};
    } catch (const GenerationError& ex) {
      throw DataError{ex.what()};
    }
  }
  const std::string text = read_file(input);
  try {
    return {parse_graph(text), {}};
  } catch (const GraphFormatError& ex) {
    throw DataError{input + ": " + ex.what()};
  } catch (const EmbeddingError& ex) {
    return {std::nullopt, std::string(to_string(ex.kind())) + ": " + ex.what()};
  }
}

ValidationSummary summarize_validation(const AssociatedPlaneGraph& g) {
  ValidationSummary s;
  const ValidationReport report = validate(g);
  s.valid = report.ok();
  for (const auto& v : report.violations) s.violations.push_back(std::string(to_string(v.kind)) + ": " + v.message);
  for (const auto& d : minimality_diagnostics(g).findings) {
    std::string line = to_string(d.kind);
    line += " at";
    for (VertexId v : d.vertices) line += " " + std::to_string(v);
    s.diagnostics.push_back(line);
  }
  return s;
}

VerdictSummary summarize_verdict(const AssociatedPlaneGraph& g, const Profile& profile) {
  const TheoremVerdict t = verify_theorem(g, profile);
  VerdictSummary s{to_string(t.kind), profile.name, t.min_degree, std::nullopt};
  if (t.witness) s.witness = summarize(*t.witness);
  return s;
}

ClaimSummary summarize(const ClaimCheck& c) { return {c.name, c.gated, c.passed, c.failures}; }

struct Options {
  std::string format = "text";
  std::string profile = "thm12";
  std::string input;
  std::string ledger_path;
  std::string output_path;
  std::string catalog_name;
  GeneratorParams gen;
};

Profile profile_named(const std::string& name) {
  return name == "thm11" ? Profile::min_degree_four() : Profile::min_degree_three();
}

RunReport analyze(const std::string& command, const Options& opt) {
  RunReport report;
  report.command = command;
  report.input = opt.input;

  Loaded loaded = load(opt.input);
  if (!loaded.graph) {
    report.validation = ValidationSummary{false, {loaded.embedding_error}, {}};
    return report;
  }
  const AssociatedPlaneGraph& g = *loaded.graph;
  report.validation = summarize_validation(g);
  if (command == "validate" || !report.validation->valid) return report;

  const OriginalGraphView original = recover_original(g);
  const Profile profile = profile_named(opt.profile);

  if (command == "recover") {
    OriginalSummary s;
    s.vertices = static_cast<int>(original.vertices().size());
    s.edges = original.edges();
    for (VertexId v : original.vertices()) s.degrees[v] = original.degree(v);
    report.original = s;
    return report;
  }

  report.verdict = summarize_verdict(g, profile);
  if (command == "light-edges") {
    std::vector<WitnessSummary> ws;
    for (const auto& w : find_light_edges(original, profile)) ws.push_back(summarize(w));
    report.light_edges = ws;
    return report;
  }

  const DischargeResult result = apply_discharging(g, original);
  ChargeSummary charges;
  charges.initial_total = format_charge(result.initial.total());
  charges.final_total = format_charge(result.final.total());
  charges.conserved = result.initial.total() == result.final.total();
  charges.transfers = result.ledger.size();
  for (const auto& t : result.ledger) ++charges.per_rule[to_string(t.rule)];
  report.charges = charges;
  if (command == "discharge") {
    if (!opt.ledger_path.empty()) write_file(opt.ledger_path, export_ledger(result.ledger));
    return report;
  }

  const AuditReport a = audit(g, original, result);
  AuditSummary s;
  s.conserved = a.conserved;
  s.ledger_consistent = a.ledger_consistent;
  for (const ClaimCheck* c : a.claims()) s.claims.push_back(summarize(*c));
  for (Element x : a.negative) s.negative.push_back(to_string(x));
  s.doubly_special_faces = a.doubly_special_faces;
  s.light_edge_free = a.light_edge_free;
  report.audit = s;
  return report;
}

void emit(const RunReport& report, const Options& opt, std::ostream& out) {
  if (opt.format == "json")
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
}

void emit_graph(const AssociatedPlaneGraph& g, const Options& opt, std::ostream& out) {
  const std::string text = serialize_graph(g);
  if (opt.output_path.empty())
    out << text;
  else
    write_file(opt.output_path, text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Light edges and discharging audits for 1-plane graphs", "onelight"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--profile", opt.profile, "Light-edge type list")->check(CLI::IsMember({"thm12", "thm11"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("graph", opt.input, "Graph JSON file, or catalog:<name>")->required();
    add_common(sub);
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check crossing marks and simplicity");
  add_input(validate_cmd);
  CLI::App* recover_cmd = app.add_subcommand("recover", "Print the original graph");
  add_input(recover_cmd);
  CLI::App* light_cmd = app.add_subcommand("light-edges", "List light edges and the theorem verdict");
  add_input(light_cmd);
  CLI::App* discharge_cmd = app.add_subcommand("discharge", "Run the discharging rules");
  add_input(discharge_cmd);
  discharge_cmd->add_option("--ledger", opt.ledger_path, "Write the transfer ledger here");
  CLI::App* audit_cmd = app.add_subcommand("audit", "Run the discharging rules and check the inequalities");
  add_input(audit_cmd);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random 1-plane graph");
  add_common(gen_cmd);
  gen_cmd->add_option("--seed", opt.gen.seed, "Random seed");
  gen_cmd->add_option("--size", opt.gen.size, "True vertex count")->check(CLI::Range(4, 100000));
  gen_cmd->add_option("--density", opt.gen.crossing_density, "Fraction of quadrangles to cross")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--min-degree", opt.gen.min_degree, "Reject drawings below this minimum degree");
  gen_cmd->add_option("--removal", opt.gen.edge_removal, "Fraction of uncrossed edges to delete")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", opt.output_path, "Write the graph here instead of stdout");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List catalog graphs or print one");
  add_common(catalog_cmd);
  catalog_cmd->add_option("name", opt.catalog_name, "Catalog entry");
  catalog_cmd->add_option("-o,--output", opt.output_path, "Write the graph here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n" << app.help();
    return exit_code::kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      emit_graph(random_oneplane(opt.gen), opt, out);
      return exit_code::kOk;
    }
    if (catalog_cmd->parsed()) {
      if (opt.catalog_name.empty()) {
        for (const auto& name : catalog_names()) out << name << "\n";
        return exit_code::kOk;
      }
      emit_graph(catalog(opt.catalog_name), opt, out);
      return exit_code::kOk;
    }
    for (CLI::App* sub : {validate_cmd, recover_cmd, light_cmd, discharge_cmd, audit_cmd}) {
      if (!sub->parsed()) continue;
      const RunReport report = analyze(sub->get_name(), opt);
      emit(report, opt, out);
      return report.exit_code();
    }
  } catch (const DataError& ex) {
    err << "error: " << ex.message << "\n";
    return exit_code::kDataError;
  } catch (const GenerationError& ex) {
    err << "error: " << ex.what() << "\n";
    return ex.kind() == GenerationErrorKind::UnknownCatalogName ? exit_code::kUsage : exit_code::kDataError;
  }
  return exit_code::kUsage;
}

}  // namespace onelight
