#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onelight/oneplanar.hpp"
#include "onelight/rational.hpp"

namespace onelight {

enum class Rule { R1, R2, R3, R4, R5, R6_1, R6_2, R6_3, R6_4, R7, R8 };

// "R1" .. "R5", "R6.1" .. "R6.4", "R7", "R8".
const char* to_string(Rule r);
std::optional<Rule> parse_rule(std::string_view text);
bool is_crossing_rule(Rule r);

// A vertex or face of the plane graph. Vertices order before faces.
struct Element {
  enum class Kind { Vertex, Face };
  Kind kind;
  int id;

  static Element vertex(VertexId v) { return {Kind::Vertex, v}; }
  static Element face(FaceId f) { return {Kind::Face, f}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
  bool is_face() const { return kind == Kind::Face; }

  friend auto operator<=>(const Element&, const Element&) = default;
};

// "v12" / "f3".
std::string to_string(Element e);
std::optional<Element> parse_element(std::string_view text);

struct Transfer {
  Rule rule;
  Element source;
  Element target;
  Charge amount;
  // Crossing rules: the false vertex passed through, and the rotation slot
  // at it whose corner face is the sender.
  std::optional<VertexId> via;
  int via_slot = -1;
  // Equal split of a face's remaining charge; the amount is signed.
  bool residual = false;
};

class ChargeState {
 public:
  ChargeState() = default;
  ChargeState(std::size_t vertices, std::size_t faces) : vertex_(vertices), face_(faces) {}

  Charge& operator[](Element e) { return e.is_vertex() ? vertex_[e.id] : face_[e.id]; }
  const Charge& operator[](Element e) const { return e.is_vertex() ? vertex_[e.id] : face_[e.id]; }

  std::size_t num_vertices() const { return vertex_.size(); }
  std::size_t num_faces() const { return face_.size(); }
  std::vector<Element> elements() const;
  Charge total() const;

 private:
  std::vector<Charge> vertex_;
  std::vector<Charge> face_;
};

// Every vertex and face starts at degree - 4.
ChargeState initial_charges(const AssociatedPlaneGraph& g);

// Largest far-endpoint degree allowed for a k-special face, k in 4..6.
int special_threshold(int k);

// A false 3-face {crossing, pivot, partner} with pivot of degree k in 4..6,
// where partner is adjacent in G to the far end of the pivot's edge and the
// far end of the partner's edge has degree <= special_threshold(k).
struct SpecialFace {
  FaceId face;
  VertexId crossing;
  VertexId pivot;
  int k;
  VertexId partner;
  // Far end of the pivot's edge, then far end of the partner's edge.
  std::array<VertexId, 2> far_endpoints;
};

// Both true vertices of each false 3-face are tried as pivot. Sorted by
// (face, pivot).
std::vector<SpecialFace> find_special_faces(const AssociatedPlaneGraph& g, const OriginalGraphView& original);

// Corner of a false vertex on a face whose two neighbors along the face
// have degree >= 9. Only such corners forward charge between faces.
struct TransitiveCorner {
  FaceId face;
  VertexId crossing;
  int slot;  // corner between rotation slots `slot` and `slot + 1`
  VertexId before, after;
};

std::vector<TransitiveCorner> transitive_corners(const AssociatedPlaneGraph& g);
// Per face, its transitive false vertices (repeated if met at several
// corners). Faces without any are absent.
std::map<FaceId, std::vector<VertexId>> find_transitive_false_vertices(const AssociatedPlaneGraph& g);

struct DischargeResult {
  ChargeState initial;
  ChargeState final;
  std::vector<Transfer> ledger;  // canonical order, see sort_ledger
};

// Degree-driven rules R1-R6 fire simultaneously on the initial
// configuration; then 4- faces split what they hold among their true
// 4- vertices (R7) and 5+ faces pay 2/3 to each 3-vertex and split the rest
// among their true 4-vertices (R8).
DischargeResult apply_discharging(const AssociatedPlaneGraph& g, const OriginalGraphView& original);
DischargeResult apply_discharging(const AssociatedPlaneGraph& g);

// Orders by rule, source, target, via, amount.
void sort_ledger(std::vector<Transfer>& ledger);

}  // namespace onelight
