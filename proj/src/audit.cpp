#include "onelight/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "onelight/lightedge.hpp"

namespace onelight {

std::vector<const ClaimCheck*> AuditReport::claims() const {
  return {&face_balance, &corner_ratio, &triangle_to_three_vertex, &triangle_to_four_vertex,
          &quad_to_small_vertices, &large_face_to_four_vertices};
}

bool AuditReport::ok() const {
  if (!unconditional_ok()) return false;
  for (const ClaimCheck* c : claims())
    if (!c->ok()) return false;
  return true;
}

namespace {

Charge large_payment(int d) { return ratio(d - 4, d); }

void record(ClaimCheck& check, bool holds, const std::string& witness) {
  ++check.gated;
  if (holds)
    ++check.passed;
  else
    check.failures.push_back(witness);
}

// Every true vertex on the walk has degree >= 3 and every side joining two
// true vertices is on the heavy list.
bool heavy_boundary(const AssociatedPlaneGraph& g, const std::vector<VertexId>& walk) {
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = walk[i], y = walk[(i + 1) % n];
    if (g.is_true(x) && g.degree(x) < 3) return false;
    if (g.is_true(x) && g.is_true(y) && !is_heavy_pair(g.degree(x), g.degree(y))) return false;
  }
  return true;
}

}  // namespace

AuditReport audit(const AssociatedPlaneGraph& g, const OriginalGraphView& original, const DischargeResult& result) {
  const PlaneEmbedding& e = g.embedding();
  AuditReport report;
  report.face_balance.name = "face balance";
  report.corner_ratio.name = "corner contribution ratio";
  report.triangle_to_three_vertex.name = "true triangle to 3-vertex";
  report.triangle_to_four_vertex.name = "true triangle to 4-vertex";
  report.quad_to_small_vertices.name = "4-face to small vertices";
  report.large_face_to_four_vertices.name = "5+ face to 4-vertices";

  // Conservation and replay.
  report.initial_total = result.initial.total();
  report.final_total = result.final.total();
  report.conserved = report.initial_total == report.final_total;
  {
    ChargeState replay = result.initial;
    for (const auto& t : result.ledger) {
      replay[t.source] -= t.amount;
      replay[t.target] += t.amount;
    }
    report.ledger_consistent = replay.num_vertices() == result.final.num_vertices() &&
                               replay.num_faces() == result.final.num_faces();
    if (report.ledger_consistent)
      for (Element x : replay.elements())
        if (replay[x] != result.final[x]) report.ledger_consistent = false;
  }

  // Ledger aggregates.
  const std::size_t nf = g.num_faces();
  std::vector<Charge> rho_plus(nf), rho_minus(nf);
  std::map<std::pair<VertexId, int>, Charge> demand;
  std::map<std::pair<FaceId, VertexId>, Charge> received;
  std::vector<const Transfer*> crossing_transfers;
  for (const auto& t : result.ledger) {
    if (t.source.is_vertex() && t.target.is_face() && g.degree(t.source.id) >= 9)
      rho_plus[t.target.id] += t.amount;
    if (is_crossing_rule(t.rule)) {
      rho_minus[t.source.id] += t.amount;
      demand[{t.via.value_or(-1), t.via_slot}] += t.amount;
      crossing_transfers.push_back(&t);
    }
    if (t.source.is_face() && t.target.is_vertex()) received[{t.source.id, t.target.id}] += t.amount;
  }
  auto received_by = [&](FaceId f, VertexId v) -> Charge {
    auto it = received.find({f, v});
    return it == received.end() ? Charge(0) : it->second;
  };

  for (FaceId f = 0; f < static_cast<FaceId>(nf); ++f) {
    const int d = e.face_degree(f);
    report.faces.push_back({f, d, rho_plus[f], rho_minus[f]});
    std::ostringstream os;
    os << "f" << f << " (degree " << d << "): rho+ = " << format_charge(rho_plus[f])
       << ", rho- = " << format_charge(rho_minus[f]);
    if (d >= 4)
      record(report.face_balance, rho_plus[f] >= rho_minus[f], os.str());
    else if (d == 3 && rho_minus[f] > 0)
      record(report.face_balance, rho_plus[f] >= rho_minus[f] + 1, os.str());
  }

  std::set<std::pair<VertexId, int>> transitive;
  for (const auto& c : transitive_corners(g)) {
    transitive.emplace(c.crossing, c.slot);
    const Charge plus = large_payment(g.degree(c.before)) + large_payment(g.degree(c.after));
    auto it = demand.find({c.crossing, c.slot});
    const Charge minus = it == demand.end() ? Charge(0) : it->second;
    report.corners.push_back({c.face, c.crossing, c.slot, plus, minus});
    if (minus > 0) {
      std::ostringstream os;
      os << "crossing v" << c.crossing << " slot " << c.slot << " on f" << c.face
         << ": pi+ = " << format_charge(plus) << ", pi- = " << format_charge(minus);
      record(report.corner_ratio, plus >= 2 * minus, os.str());
    }
  }
  for (const Transfer* t : crossing_transfers) {
    if (!t->via || !transitive.contains({*t->via, t->via_slot})) {
      std::ostringstream os;
      os << to_string(t->rule) << " transfer from " << to_string(t->source)
         << " through a non-transitive corner";
      record(report.corner_ratio, false, os.str());
    }
  }

  // Gated per-face claims.
  for (FaceId f = 0; f < static_cast<FaceId>(nf); ++f) {
    const int d = e.face_degree(f);
    const auto walk = e.face_vertices(f);

    if (d == 3 && !g.is_false_face(f)) {
      for (int p = 0; p < 3; ++p) {
        const VertexId x = walk[p];
        const int n1 = g.degree(walk[(p + 1) % 3]), n2 = g.degree(walk[(p + 2) % 3]);
        const Charge got = received_by(f, x);
        std::ostringstream os;
        os << "f" << f << " sends " << format_charge(got) << " to v" << x;
        if (g.degree(x) == 3 && n1 >= 24 && n2 >= 24)
          record(report.triangle_to_three_vertex, got >= ratio(2, 3), os.str());
        if (g.degree(x) == 4 && n1 >= 12 && n2 >= 12)
          record(report.triangle_to_four_vertex, got >= ratio(1, 3), os.str());
      }
    }

    if (d == 4) {
      const std::set<VertexId> distinct(walk.begin(), walk.end());
      const auto false_count = std::count_if(walk.begin(), walk.end(), [&](VertexId v) { return g.is_false(v); });
      if (distinct.size() == 4 && false_count < 2 && heavy_boundary(g, walk)) {
        const bool has_three = std::any_of(walk.begin(), walk.end(),
                                           [&](VertexId v) { return g.is_true(v) && g.degree(v) == 3; });
        const bool has_four = std::any_of(walk.begin(), walk.end(),
                                          [&](VertexId v) { return g.is_true(v) && g.degree(v) == 4; });
        if (has_three || has_four) {
          const Charge bound = has_three ? ratio(5, 12) : ratio(1, 3);
          bool holds = true;
          std::ostringstream os;
          os << "f" << f << ":";
          for (VertexId v : walk) {
            if (!g.is_true(v)) continue;
            const int dv = g.degree(v);
            if (has_three ? dv > 4 : dv != 4) continue;
            const Charge got = received_by(f, v);
            os << " v" << v << " gets " << format_charge(got);
            holds = holds && got >= bound;
          }
          record(report.quad_to_small_vertices, holds, os.str());
        }
      }
    }

    if (d >= 5 && heavy_boundary(g, walk)) {
      std::map<VertexId, int> corners;
      for (VertexId v : walk)
        if (g.is_true(v) && g.degree(v) == 4) ++corners[v];
      if (!corners.empty()) {
        bool holds = true;
        std::ostringstream os;
        os << "f" << f << ":";
        for (auto [v, mult] : corners) {
          const Charge got = received_by(f, v);
          os << " v" << v << " gets " << format_charge(got);
          holds = holds && got >= ratio(mult, 3);
        }
        record(report.large_face_to_four_vertices, holds, os.str());
      }
    }
  }

  for (Element x : result.final.elements())
    if (result.final[x] < 0) report.negative.push_back(x);

  {
    std::map<FaceId, int> pivots;
    for (const auto& s : find_special_faces(g, original)) ++pivots[s.face];
    for (auto [f, count] : pivots) report.doubly_special_faces += count >= 2;
  }
  report.light_edge_free = is_light_edge_free(original);
  return report;
}

AuditReport audit(const AssociatedPlaneGraph& g, const DischargeResult& result) {
  return audit(g, recover_original(g), result);
}

}  // namespace onelight
