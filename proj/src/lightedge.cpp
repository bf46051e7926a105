#include "onelight/lightedge.hpp"

#include <algorithm>
#include <tuple>

namespace onelight {

const char* to_string(LightType t) {
  switch (t) {
    case LightType::T3: return "T3";
    case LightType::T4: return "T4";
    case LightType::T5: return "T5";
    case LightType::T6: return "T6";
    case LightType::T7: return "T7";
  }
  return "?";
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Witness: return "WITNESS";
    case VerdictKind::HypothesisUnmet: return "HYPOTHESIS-UNMET";
    case VerdictKind::CounterexampleCandidate: return "COUNTEREXAMPLE-CANDIDATE";
    case VerdictKind::InvalidInput: return "INVALID-INPUT";
  }
  return "?";
}

std::optional<int> Profile::bound_for(int small_degree) const {
  if (small_degree < 3 || small_degree > 7) return std::nullopt;
  return bound[small_degree - 3];
}

Profile Profile::min_degree_three() { return {"thm12", {23, 11, 9, 8, 7}, 3}; }
Profile Profile::min_degree_four() { return {"thm11", {std::nullopt, 13, 9, 8, 7}, 4}; }
Profile Profile::conjectured() { return {"conjectured", {20, 10, 9, 8, 7}, 3}; }

std::optional<LightType> classify_edge(int a, int b, const Profile& profile) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  const auto limit = profile.bound_for(lo);
  if (!limit || hi > *limit) return std::nullopt;
  return static_cast<LightType>(lo - 3);
}

bool is_heavy_pair(int a, int b) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  return (lo == 3 && hi >= 24) || (lo == 4 && hi >= 12) || (lo == 5 && hi >= 10) ||
         (lo == 6 && hi >= 9) || (lo >= 7 && hi >= 8);
}

std::vector<LightEdgeWitness> find_light_edges(const OriginalGraphView& g, const Profile& profile) {
  std::vector<LightEdgeWitness> out;
  for (auto [u, v] : g.edges()) {
    const int du = g.degree(u), dv = g.degree(v);
    if (auto t = classify_edge(du, dv, profile)) out.push_back({u, v, du, dv, *t});
  }
  std::sort(out.begin(), out.end(), [](const LightEdgeWitness& x, const LightEdgeWitness& y) {
    return std::tuple(x.type, std::min(x.degree_u, x.degree_v), x.u, x.v) <
           std::tuple(y.type, std::min(y.degree_u, y.degree_v), y.u, y.v);
  });
  return out;
}

bool is_light_edge_free(const OriginalGraphView& g, const Profile& profile) {
  for (auto [u, v] : g.edges())
    if (classify_edge(g.degree(u), g.degree(v), profile)) return false;
  return true;
}

TheoremVerdict verify_theorem(const AssociatedPlaneGraph& g, const Profile& profile) {
  TheoremVerdict verdict{VerdictKind::InvalidInput, 0, std::nullopt, validate(g), minimality_diagnostics(g)};
  if (!verdict.validation.ok()) return verdict;

  const OriginalGraphView original = recover_original(g);
  verdict.min_degree = original.min_degree();
  if (verdict.min_degree < profile.hypothesis_min_degree) {
    verdict.kind = VerdictKind::HypothesisUnmet;
    return verdict;
  }
  auto witnesses = find_light_edges(original, profile);
  if (witnesses.empty()) {
    verdict.kind = VerdictKind::CounterexampleCandidate;
    return verdict;
  }
  verdict.kind = VerdictKind::Witness;
  verdict.witness = witnesses.front();
  return verdict;
}

}  // namespace onelight
