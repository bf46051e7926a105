#include "onelight/embedding.hpp"

#include <sstream>

namespace onelight {

namespace {

std::uint64_t key(VertexId v, VertexId u) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
         static_cast<std::uint32_t>(u);
}

int wrap(int i, int n) {
  const int r = i % n;
  return r < 0 ? r + n : r;
}

[[noreturn]] void fail(EmbeddingErrorKind kind, const std::string& msg) {
  throw EmbeddingError(kind, msg);
}

}  // namespace

std::size_t RotationSystem::num_edges() const {
  std::size_t ends = 0;
  for (const auto& r : rotation) ends += r.size();
  return ends / 2;
}

const char* to_string(EmbeddingErrorKind kind) {
  switch (kind) {
    case EmbeddingErrorKind::MalformedRotation: return "MalformedRotation";
    case EmbeddingErrorKind::Disconnected: return "Disconnected";
    case EmbeddingErrorKind::NotPlane: return "NotPlane";
  }
  return "?";
}

VertexId PlaneEmbedding::neighbor(VertexId v, int i) const {
  const auto& r = rot_.rotation[v];
  return r[wrap(i, static_cast<int>(r.size()))];
}

std::optional<int> PlaneEmbedding::position(VertexId v, VertexId u) const {
  auto it = position_.find(key(v, u));
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

HalfEdgeId PlaneEmbedding::half_edge(VertexId v, int i) const {
  return offset_[v] + wrap(i, degree(v));
}

FaceId PlaneEmbedding::corner_face(VertexId v, int i) const {
  return face_of_[half_edge(v, i + 1)];
}

std::vector<VertexId> PlaneEmbedding::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (HalfEdgeId h : faces_[f]) out.push_back(tail_[h]);
  return out;
}

PlaneEmbedding build_embedding(RotationSystem rot) {
  const int n = static_cast<int>(rot.num_vertices());
  PlaneEmbedding e;

  // Rotation sanity: ids in range, no loops, no repeated neighbor.
  for (VertexId v = 0; v < n; ++v) {
    const auto& r = rot.rotation[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      const VertexId u = r[i];
      if (u < 0 || u >= n) {
        std::ostringstream os;
        os << "vertex " << v << " lists unknown neighbor " << u;
        fail(EmbeddingErrorKind::MalformedRotation, os.str());
      }
      if (u == v) {
        std::ostringstream os;
        os << "vertex " << v << " has a loop";
        fail(EmbeddingErrorKind::MalformedRotation, os.str());
      }
      if (!e.position_.emplace(key(v, u), i).second) {
        std::ostringstream os;
        os << "vertex " << v << " lists neighbor " << u << " twice";
        fail(EmbeddingErrorKind::MalformedRotation, os.str());
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : rot.rotation[v]) {
      if (!e.position_.contains(key(u, v))) {
        std::ostringstream os;
        os << "asymmetric rotation: " << u << " in rotation of " << v << " but not vice versa";
        fail(EmbeddingErrorKind::MalformedRotation, os.str());
      }
    }
  }

  // Half-edges.
  e.offset_.resize(n + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    e.offset_[v + 1] = e.offset_[v] + static_cast<int>(rot.rotation[v].size());
  const int halves = e.offset_[n];
  if (halves == 0) fail(EmbeddingErrorKind::Disconnected, "graph has no edges");

  e.tail_.resize(halves);
  e.head_.resize(halves);
  e.twin_.resize(halves);
  e.next_.resize(halves);
  for (VertexId v = 0; v < n; ++v) {
    const auto& r = rot.rotation[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      const HalfEdgeId h = e.offset_[v] + i;
      e.tail_[h] = v;
      e.head_[h] = r[i];
    }
  }
  for (HalfEdgeId h = 0; h < halves; ++h) {
    const VertexId u = e.tail_[h], v = e.head_[h];
    const int j = e.position_.at(key(v, u));
    e.twin_[h] = e.offset_[v] + j;
    const int deg = static_cast<int>(rot.rotation[v].size());
    e.next_[h] = e.offset_[v] + (j + 1) % deg;
  }

  // Connectivity over all vertices (isolated vertices count as components).
  {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : rot.rotation[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != n) {
      std::ostringstream os;
      os << "graph is disconnected: " << reached << " of " << n << " vertices reachable from 0";
      fail(EmbeddingErrorKind::Disconnected, os.str());
    }
  }

  // Face tracing in half-edge order; each face starts at its lowest half-edge.
  e.face_of_.assign(halves, -1);
  for (HalfEdgeId start = 0; start < halves; ++start) {
    if (e.face_of_[start] != -1) continue;
    const FaceId f = static_cast<FaceId>(e.faces_.size());
    std::vector<HalfEdgeId> walk;
    HalfEdgeId h = start;
    do {
      e.face_of_[h] = f;
      walk.push_back(h);
      h = e.next_[h];
    } while (h != start);
    e.faces_.push_back(std::move(walk));
  }

  e.rot_ = std::move(rot);
  const int chi = euler_characteristic(e);
  if (chi != 2) {
    std::ostringstream os;
    os << "rotation does not describe a sphere embedding: V - E + F = " << chi;
    fail(EmbeddingErrorKind::NotPlane, os.str());
  }
  return e;
}

int euler_characteristic(const PlaneEmbedding& e) {
  return static_cast<int>(e.num_vertices()) - static_cast<int>(e.num_edges()) +
         static_cast<int>(e.num_faces());
}

}  // namespace onelight
