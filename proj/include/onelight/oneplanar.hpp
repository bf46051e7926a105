#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "onelight/embedding.hpp"

namespace onelight {

// A plane graph in which some vertices are marked as crossing points
// ("false" vertices) of an underlying 1-plane drawing.
class AssociatedPlaneGraph {
 public:
  AssociatedPlaneGraph(PlaneEmbedding embedding, std::vector<bool> false_marks);
  static AssociatedPlaneGraph from_rotation(RotationSystem rot, std::vector<bool> false_marks);

  const PlaneEmbedding& embedding() const { return emb_; }
  const std::vector<bool>& false_marks() const { return marks_; }

  std::size_t num_vertices() const { return emb_.num_vertices(); }
  std::size_t num_faces() const { return emb_.num_faces(); }
  int degree(VertexId v) const { return emb_.degree(v); }
  int face_degree(FaceId f) const { return emb_.face_degree(f); }

  bool is_false(VertexId v) const { return marks_[v]; }
  bool is_true(VertexId v) const { return !marks_[v]; }
  std::vector<VertexId> false_vertices() const;
  std::vector<VertexId> true_vertices() const;
  // A face is false when its boundary meets a false vertex.
  bool is_false_face(FaceId f) const;

 private:
  PlaneEmbedding emb_;
  std::vector<bool> marks_;
};

enum class ViolationKind {
  FalseVertexDegree,
  AdjacentFalseVertices,
  RecoveredLoop,
  RecoveredMultiEdge,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Total: every structural problem becomes a report entry.
ValidationReport validate(const AssociatedPlaneGraph& g);

class RecoveryError : public std::runtime_error {
 public:
  RecoveryError(ViolationKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ViolationKind kind() const { return kind_; }

 private:
  ViolationKind kind_;
};

// The abstract graph G drawn by the plane graph; vertex ids are shared with
// the plane graph, only true vertices belong to G.
class OriginalGraphView {
 public:
  OriginalGraphView(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges,
                    std::size_t id_space);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  // Sorted, each pair with first < second.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  int degree(VertexId v) const { return degree_[v]; }
  bool has_edge(VertexId u, VertexId v) const;
  // 0 for a graph without vertices.
  int min_degree() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<int> degree_;
  std::set<std::pair<VertexId, VertexId>> edge_set_;
};

// Replaces each crossing by its two edges. Segments are followed through
// chains of false vertices. Throws RecoveryError when the result is not
// simple, and std::invalid_argument when a segment cannot be followed (a
// false vertex of degree other than four).
OriginalGraphView recover_original(const AssociatedPlaneGraph& g);

// Local picture at a crossing. endpoints[0..3] follow the rotation starting
// at the lowest-id neighbor; endpoints[i] and endpoints[i+2] belong to the
// same original edge. faces[i] is incident with the half-edges to
// endpoints[i] and endpoints[i+1].
struct CrossingNeighborhood {
  VertexId crossing;
  std::array<VertexId, 4> endpoints;
  std::array<FaceId, 4> faces;
};

std::vector<CrossingNeighborhood> crossing_neighborhoods(const AssociatedPlaneGraph& g);

// Configurations that cannot occur in a crossing-minimal drawing of a simple
// graph.
enum class DiagnosticKind {
  // 3-vertex on two 3-faces with two false neighbors and no 5+-face.
  ThreeVertexWithoutLargeFace,
  // edge from a false vertex to a 3-vertex with 3-faces on both sides.
  FalseEdgeBetweenTriangles,
  // true 4-vertex whose four faces are all false 3-faces.
  FourVertexInFalseTriangles,
};

const char* to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::vector<VertexId> vertices;
};

struct DiagnosticsReport {
  std::vector<Diagnostic> findings;
  bool empty() const { return findings.empty(); }
};

// Needs only the embedding; runs on drawings that fail validation too.
DiagnosticsReport minimality_diagnostics(const AssociatedPlaneGraph& g);

}  // namespace onelight
