#include "onelight/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace onelight {

namespace {

using Rotation = std::vector<std::vector<VertexId>>;

void insert_after(std::vector<VertexId>& ring, VertexId after, VertexId x) {
  auto it = std::find(ring.begin(), ring.end(), after);
  ring.insert(it + 1, x);
}

// New vertex inside the face with boundary `walk` (tails in tracing order),
// joined to the corners at the given walk positions (ascending).
VertexId add_vertex_in_face(Rotation& rot, const std::vector<VertexId>& walk, const std::vector<int>& corners) {
  const VertexId x = static_cast<VertexId>(rot.size());
  const int n = static_cast<int>(walk.size());
  rot.emplace_back();
  for (int p : corners) {
    const VertexId v = walk[p], prev = walk[(p + n - 1) % n];
    insert_after(rot[v], prev, x);
  }
  for (auto it = corners.rbegin(); it != corners.rend(); ++it) rot[x].push_back(walk[*it]);
  return x;
}

// Nests a 4-cycle inside a quadrangle, each new vertex joined to one corner.
void nest_quadrangle(Rotation& rot, const std::vector<VertexId>& walk) {
  const VertexId base = static_cast<VertexId>(rot.size());
  rot.resize(rot.size() + 4);
  for (int i = 0; i < 4; ++i) {
    const VertexId corner = walk[i], prev = walk[(i + 3) % 4];
    insert_after(rot[corner], prev, base + i);
    rot[base + i] = {base + (i + 1) % 4, corner, base + (i + 3) % 4};
  }
}

std::vector<std::vector<VertexId>> face_walks(const PlaneEmbedding& e) {
  std::vector<std::vector<VertexId>> walks;
  for (FaceId f = 0; f < static_cast<FaceId>(e.num_faces()); ++f) walks.push_back(e.face_vertices(f));
  return walks;
}

bool is_simple_quadrangle(const std::vector<VertexId>& w) {
  return w.size() == 4 && w[0] != w[2] && w[1] != w[3];
}

// std distributions are implementation-defined; keep the stream portable.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

bool connected_without(const Rotation& rot, VertexId a, VertexId b) {
  std::vector<char> seen(rot.size(), 0);
  std::vector<VertexId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : rot[v]) {
      if ((v == a && u == b) || (v == b && u == a) || seen[u]) continue;
      if (u == b) return true;
      seen[u] = 1;
      stack.push_back(u);
    }
  }
  return false;
}

void erase_edge(Rotation& rot, VertexId a, VertexId b) {
  rot[a].erase(std::find(rot[a].begin(), rot[a].end(), b));
  rot[b].erase(std::find(rot[b].begin(), rot[b].end(), a));
}

std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

struct Attempt {
  Rotation rot;
  std::vector<bool> marks;
};

// Joins each true vertex of degree below `target` to a true vertex across
// one of its faces, when some face allows it.
void raise_low_degrees(Attempt& a, int target) {
  for (VertexId v = 0; v < static_cast<VertexId>(a.rot.size()); ++v) {
    while (!a.marks[v] && static_cast<int>(a.rot[v].size()) < target) {
      const PlaneEmbedding e = build_embedding(RotationSystem{a.rot});
      bool joined = false;
      for (int i = 0; i < e.degree(v) && !joined; ++i) {
        const auto walk = e.face_vertices(e.corner_face(v, i));
        const int n = static_cast<int>(walk.size());
        if (std::count(walk.begin(), walk.end(), v) != 1) continue;
        const int at = static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin());
        for (int j = 0; j < n && !joined; ++j) {
          const VertexId w = walk[j];
          if (w == v || a.marks[w] || e.adjacent(v, w) || std::count(walk.begin(), walk.end(), w) != 1) continue;
          insert_after(a.rot[v], walk[(at + n - 1) % n], w);
          insert_after(a.rot[w], walk[(j + n - 1) % n], v);
          joined = true;
        }
      }
      if (!joined) break;
    }
  }
}

Attempt grow(const GeneratorParams& p, Stream& rng) {
  Rotation rot = four_cycle().rotation;
  while (static_cast<int>(rot.size()) < p.size) {
    const PlaneEmbedding e = build_embedding(RotationSystem{rot});
    const int remaining = p.size - static_cast<int>(rot.size());
    if (remaining >= 4 && rng.below(4) == 0) {
      nest_quadrangle(rot, e.face_vertices(static_cast<FaceId>(rng.below(e.num_faces()))));
      continue;
    }
    // Split a quadrangle along a diagonal path; half of the time the corner
    // is drawn by degree so hubs emerge.
    FaceId f;
    VertexId corner;
    if (rng.below(2) == 0) {
      const HalfEdgeId h = static_cast<HalfEdgeId>(rng.below(e.num_half_edges()));
      f = e.face_of(h);
      corner = e.tail(h);
    } else {
      f = static_cast<FaceId>(rng.below(e.num_faces()));
      corner = e.face_vertices(f)[rng.below(4)];
    }
    const auto walk = e.face_vertices(f);
    const int at = static_cast<int>(std::find(walk.begin(), walk.end(), corner) - walk.begin());
    add_vertex_in_face(rot, walk, {std::min(at, (at + 2) % 4), std::max(at, (at + 2) % 4)});
  }

  Attempt out{rot, std::vector<bool>(rot.size(), false)};
  const PlaneEmbedding e = build_embedding(RotationSystem{rot});
  std::set<std::uint64_t> edges;
  for (VertexId v = 0; v < static_cast<VertexId>(rot.size()); ++v)
    for (VertexId u : rot[v]) edges.insert(edge_key(u, v));

  auto walks = face_walks(e);
  rng.shuffle(walks);
  const auto target = static_cast<std::size_t>(std::llround(p.crossing_density * static_cast<double>(walks.size())));
  std::size_t placed = 0;
  for (const auto& w : walks) {
    if (placed >= target) break;
    if (!is_simple_quadrangle(w)) continue;
    if (edges.contains(edge_key(w[0], w[2])) || edges.contains(edge_key(w[1], w[3]))) continue;
    add_vertex_in_face(out.rot, w, {0, 1, 2, 3});
    out.marks.push_back(true);
    edges.insert(edge_key(w[0], w[2]));
    edges.insert(edge_key(w[1], w[3]));
    ++placed;
  }

  if (p.min_degree > 0) raise_low_degrees(out, p.min_degree);

  if (p.edge_removal > 0) {
    std::vector<std::pair<VertexId, VertexId>> plain;
    for (VertexId v = 0; v < static_cast<VertexId>(out.rot.size()); ++v)
      for (VertexId u : out.rot[v])
        if (v < u && !out.marks[v] && !out.marks[u]) plain.emplace_back(v, u);
    rng.shuffle(plain);
    const auto quota = static_cast<std::size_t>(std::llround(p.edge_removal * static_cast<double>(plain.size())));
    std::size_t removed = 0;
    for (auto [a, b] : plain) {
      if (removed >= quota) break;
      if (out.rot[a].size() <= 3 || out.rot[b].size() <= 3) continue;
      if (!connected_without(out.rot, a, b)) continue;
      erase_edge(out.rot, a, b);
      ++removed;
    }
  }
  return out;
}

}  // namespace

AssociatedPlaneGraph quadrangulation_diagonals(const RotationSystem& q) {
  const PlaneEmbedding e = build_embedding(q);
  std::vector<FaceId> all(e.num_faces());
  for (FaceId f = 0; f < static_cast<FaceId>(all.size()); ++f) all[f] = f;
  return quadrangulation_diagonals(q, all);
}

AssociatedPlaneGraph quadrangulation_diagonals(const RotationSystem& q, std::span<const FaceId> faces) {
  const PlaneEmbedding e = build_embedding(q);
  for (FaceId f = 0; f < static_cast<FaceId>(e.num_faces()); ++f) {
    if (!is_simple_quadrangle(e.face_vertices(f))) {
      std::ostringstream os;
      os << "face " << f << " is not a quadrangle with four distinct corners";
      throw GenerationError(GenerationErrorKind::NotQuadrangulation, os.str());
    }
  }
  Rotation rot = q.rotation;
  std::vector<bool> marks(rot.size(), false);
  for (FaceId f : faces) {
    add_vertex_in_face(rot, e.face_vertices(f), {0, 1, 2, 3});
    marks.push_back(true);
  }
  AssociatedPlaneGraph g = AssociatedPlaneGraph::from_rotation(RotationSystem{std::move(rot)}, std::move(marks));
  const ValidationReport report = validate(g);
  if (!report.ok()) throw RecoveryError(report.violations.front().kind, report.violations.front().message);
  return g;
}

AssociatedPlaneGraph random_oneplane(const GeneratorParams& p) {
  if (p.size < 4) throw std::invalid_argument("generator size must be at least 4");
  if (p.crossing_density < 0 || p.crossing_density > 1 || p.edge_removal < 0 || p.edge_removal > 1)
    throw std::invalid_argument("generator fractions must lie in [0, 1]");

  for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
    Stream rng(mix(p.seed ^ mix(static_cast<std::uint64_t>(attempt))));
    Attempt a = grow(p, rng);
    AssociatedPlaneGraph g = AssociatedPlaneGraph::from_rotation(RotationSystem{std::move(a.rot)}, std::move(a.marks));
    if (!validate(g).ok()) continue;
    if (recover_original(g).min_degree() < p.min_degree) continue;
    return g;
  }
  std::ostringstream os;
  os << "no valid drawing with minimum degree " << p.min_degree << " after " << p.max_attempts << " attempts";
  throw GenerationError(GenerationErrorKind::GenerationFailed, os.str());
}

}  // namespace onelight
