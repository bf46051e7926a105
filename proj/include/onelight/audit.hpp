#pragma once

#include <string>
#include <vector>

#include "onelight/discharging.hpp"
#include "onelight/oneplanar.hpp"
#include "onelight/rational.hpp"

namespace onelight {

// What a face takes in from incident 9+ vertices versus what it forwards
// through transitive crossings.
struct FaceBalance {
  FaceId face;
  int degree;
  Charge received_from_large;  // rho+
  Charge sent_through;         // rho-
};

// One transitive corner: the two large neighbors' per-face payments against
// what the face forwards through this corner.
struct CornerBalance {
  FaceId face;
  VertexId crossing;
  int slot;
  Charge contribution;  // pi+
  Charge demand;        // pi-
};

// A hypothesis-gated inequality. Instances whose hypotheses do not hold are
// not counted; zero gated instances is a valid outcome.
struct ClaimCheck {
  std::string name;
  std::size_t gated = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return gated == passed; }
};

struct AuditReport {
  Charge initial_total;
  Charge final_total;
  bool conserved = false;
  // Replaying the ledger on the initial charges reproduces the final ones.
  bool ledger_consistent = false;

  std::vector<FaceBalance> faces;
  std::vector<CornerBalance> corners;

  // rho+ >= rho- on 4+ faces, rho+ >= rho- + 1 on 3-faces that forward.
  ClaimCheck face_balance;
  // pi+ >= 2 pi- per transitive corner; crossing rules only fire at
  // transitive corners.
  ClaimCheck corner_ratio;
  // True 3-face, 3-vertex whose face neighbors are 24+: sends it >= 2/3.
  ClaimCheck triangle_to_three_vertex;
  // True 3-face, 4-vertex whose face neighbors are 12+: sends it >= 1/3.
  ClaimCheck triangle_to_four_vertex;
  // 4-face with at most one false vertex and only heavy true-true sides:
  // >= 5/12 to each true 4- vertex if a 3-vertex is present, otherwise
  // >= 1/3 to each true 4-vertex.
  ClaimCheck quad_to_small_vertices;
  // 5+ face with only heavy true-true sides: >= 1/3 to each true 4-vertex.
  ClaimCheck large_face_to_four_vertices;

  std::vector<Element> negative;
  // False 3-faces special via both of their true vertices.
  std::size_t doubly_special_faces = 0;
  bool light_edge_free = false;

  std::vector<const ClaimCheck*> claims() const;
  bool unconditional_ok() const { return conserved && ledger_consistent && face_balance.ok() && corner_ratio.ok(); }
  bool ok() const;
};

AuditReport audit(const AssociatedPlaneGraph& g, const OriginalGraphView& original, const DischargeResult& result);
AuditReport audit(const AssociatedPlaneGraph& g, const DischargeResult& result);

}  // namespace onelight
