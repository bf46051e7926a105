#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace onelight {

using VertexId = int;
using FaceId = int;
using HalfEdgeId = int;

// Cyclic counterclockwise neighbor order per vertex. Vertex ids are dense
// indices into `rotation`.
struct RotationSystem {
  std::vector<std::vector<VertexId>> rotation;

  std::size_t num_vertices() const { return rotation.size(); }
  std::size_t num_edges() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

enum class EmbeddingErrorKind { MalformedRotation, Disconnected, NotPlane };

class EmbeddingError : public std::runtime_error {
 public:
  EmbeddingError(EmbeddingErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  EmbeddingErrorKind kind() const { return kind_; }

 private:
  EmbeddingErrorKind kind_;
};

const char* to_string(EmbeddingErrorKind kind);

// Sphere embedding given by a rotation system. Half-edge `offset(v) + i` is
// the directed edge v -> rotation[v][i]. Faces are traced by taking, after
// u -> v, the successor of u in the rotation at v.
class PlaneEmbedding {
 public:
  const RotationSystem& rotation() const { return rot_; }

  std::size_t num_vertices() const { return rot_.num_vertices(); }
  std::size_t num_edges() const { return tail_.size() / 2; }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_half_edges() const { return tail_.size(); }

  int degree(VertexId v) const { return static_cast<int>(rot_.rotation[v].size()); }
  std::span<const VertexId> neighbors(VertexId v) const { return rot_.rotation[v]; }
  // Neighbor at cyclic position i (any integer, taken mod degree).
  VertexId neighbor(VertexId v, int i) const;
  // Position of u in the rotation at v, if adjacent.
  std::optional<int> position(VertexId v, VertexId u) const;
  bool adjacent(VertexId u, VertexId v) const { return position(u, v).has_value(); }

  HalfEdgeId half_edge(VertexId v, int i) const;
  VertexId tail(HalfEdgeId h) const { return tail_[h]; }
  VertexId head(HalfEdgeId h) const { return head_[h]; }
  HalfEdgeId twin(HalfEdgeId h) const { return twin_[h]; }
  HalfEdgeId next(HalfEdgeId h) const { return next_[h]; }
  FaceId face_of(HalfEdgeId h) const { return face_of_[h]; }

  // Face incident with edges v-neighbor(v,i) and v-neighbor(v,i+1).
  FaceId corner_face(VertexId v, int i) const;

  std::span<const HalfEdgeId> face_walk(FaceId f) const { return faces_[f]; }
  // Tails of the boundary walk, starting at the face's lowest half-edge.
  std::vector<VertexId> face_vertices(FaceId f) const;
  int face_degree(FaceId f) const { return static_cast<int>(faces_[f].size()); }

 private:
  friend PlaneEmbedding build_embedding(RotationSystem rot);

  RotationSystem rot_;
  std::vector<HalfEdgeId> offset_;
  std::vector<VertexId> tail_, head_;
  std::vector<HalfEdgeId> twin_, next_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<HalfEdgeId>> faces_;
  std::unordered_map<std::uint64_t, int> position_;
};

// Throws EmbeddingError on asymmetric/looped/duplicated rotations,
// disconnected or edgeless graphs, and rotations that are not sphere
// embeddings.
PlaneEmbedding build_embedding(RotationSystem rot);

// V - E + F.
int euler_characteristic(const PlaneEmbedding& e);

}  // namespace onelight
