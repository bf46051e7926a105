#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "onelight/oneplanar.hpp"

namespace onelight {

// Light-edge types, named by the degree of the smaller endpoint.
enum class LightType { T3, T4, T5, T6, T7 };

const char* to_string(LightType t);

// Upper bound on the larger endpoint degree, per smaller endpoint degree
// 3..7; nullopt disables that type.
struct Profile {
  std::string name;
  std::array<std::optional<int>, 5> bound;
  // Minimum degree under which the list is guaranteed to hit.
  int hypothesis_min_degree = 3;

  std::optional<int> bound_for(int small_degree) const;

  // (3,<=23) (4,<=11) (5,<=9) (6,<=8) (7,7): every 1-planar graph with
  // minimum degree 3 has one of these.
  static Profile min_degree_three();
  // (4,<=13) (5,<=9) (6,<=8) (7,7): the earlier list for minimum degree 4.
  static Profile min_degree_four();
  // Conjectured sharpening (3,<=20) (4,<=10); for experiments only.
  static Profile conjectured();
};

// Order-insensitive. Only the type keyed by min(a, b) is considered.
std::optional<LightType> classify_edge(int a, int b, const Profile& profile = Profile::min_degree_three());

// True when (a, b) is on the "heavy" list (3,>=24) (4,>=12) (5,>=10) (6,>=9)
// (>=7,>=8) that a counterexample would have to consist of. Written
// independently of classify_edge.
bool is_heavy_pair(int a, int b);

struct LightEdgeWitness {
  VertexId u, v;  // u < v
  int degree_u, degree_v;
  LightType type;
};

// Sorted by (type, smaller degree, u, v).
std::vector<LightEdgeWitness> find_light_edges(const OriginalGraphView& g,
                                               const Profile& profile = Profile::min_degree_three());

// True when no edge of g is light.
bool is_light_edge_free(const OriginalGraphView& g, const Profile& profile = Profile::min_degree_three());

enum class VerdictKind { Witness, HypothesisUnmet, CounterexampleCandidate, InvalidInput };

const char* to_string(VerdictKind k);

struct TheoremVerdict {
  VerdictKind kind;
  int min_degree = 0;
  std::optional<LightEdgeWitness> witness;
  ValidationReport validation;
  DiagnosticsReport diagnostics;
};

// InvalidInput when validation fails; otherwise searches for a light edge
// whenever the minimum degree meets the profile's hypothesis.
TheoremVerdict verify_theorem(const AssociatedPlaneGraph& g,
                              const Profile& profile = Profile::min_degree_three());

}  // namespace onelight
