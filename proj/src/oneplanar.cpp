#include "onelight/oneplanar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace onelight {

AssociatedPlaneGraph::AssociatedPlaneGraph(PlaneEmbedding embedding, std::vector<bool> false_marks)
    : emb_(std::move(embedding)), marks_(std::move(false_marks)) {
  if (marks_.size() != emb_.num_vertices())
    throw std::invalid_argument("false-vertex marks do not match the vertex count");
}

AssociatedPlaneGraph AssociatedPlaneGraph::from_rotation(RotationSystem rot,
                                                         std::vector<bool> false_marks) {
  return AssociatedPlaneGraph(build_embedding(std::move(rot)), std::move(false_marks));
}

std::vector<VertexId> AssociatedPlaneGraph::false_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(marks_.size()); ++v)
    if (marks_[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> AssociatedPlaneGraph::true_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(marks_.size()); ++v)
    if (!marks_[v]) out.push_back(v);
  return out;
}

bool AssociatedPlaneGraph::is_false_face(FaceId f) const {
  for (HalfEdgeId h : emb_.face_walk(f))
    if (marks_[emb_.tail(h)]) return true;
  return false;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::FalseVertexDegree: return "false vertex degree != 4";
    case ViolationKind::AdjacentFalseVertices: return "adjacent false vertices";
    case ViolationKind::RecoveredLoop: return "recovered loop";
    case ViolationKind::RecoveredMultiEdge: return "recovered multi-edge";
  }
  return "?";
}

const char* to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::ThreeVertexWithoutLargeFace: return "3-vertex on two 3-faces with two false neighbors lacks a 5+-face";
    case DiagnosticKind::FalseEdgeBetweenTriangles: return "edge from false vertex to 3-vertex lies on two 3-faces";
    case DiagnosticKind::FourVertexInFalseTriangles: return "true 4-vertex incident with four false 3-faces";
  }
  return "?";
}

namespace {

struct StrandTrace {
  // One entry per (true vertex, incident half-edge): the true vertex at the
  // far end of the strand leaving along that half-edge.
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<Violation> issues;
  bool unfollowable = false;
};

StrandTrace trace_strands(const AssociatedPlaneGraph& g) {
  const PlaneEmbedding& e = g.embedding();
  const int n = static_cast<int>(g.num_vertices());
  StrandTrace out;
  // covered[v*2 + parity]: strand through false vertex v using rotation
  // slots {parity, parity + 2}.
  std::vector<char> covered(2 * n, 0);

  for (VertexId u = 0; u < n; ++u) {
    if (g.is_false(u)) continue;
    for (VertexId first : e.neighbors(u)) {
      VertexId prev = u, cur = first;
      bool broken = false;
      for (int steps = 0; g.is_false(cur); ++steps) {
        if (e.degree(cur) != 4 || steps > n) {
          broken = true;
          break;
        }
        const int j = *e.position(cur, prev);
        covered[2 * cur + j % 2] = 1;
        prev = cur;
        cur = e.neighbor(cur, j + 2);
      }
      if (broken) {
        out.unfollowable = true;
        continue;
      }
      out.ends.emplace_back(u, cur);
    }
  }

  std::map<std::pair<VertexId, VertexId>, int> count;
  for (auto [u, w] : out.ends) count[{std::min(u, w), std::max(u, w)}] += 1;
  for (const auto& [edge, c] : count) {
    const auto [u, w] = edge;
    // Every recovered edge is reached from both of its ends.
    const int multiplicity = c / 2;
    if (u == w) {
      std::ostringstream os;
      os << "recovered edge is a loop at " << u;
      out.issues.push_back({ViolationKind::RecoveredLoop, {u}, os.str()});
    } else if (multiplicity > 1) {
      std::ostringstream os;
      os << "recovered edge " << u << "-" << w << " appears " << multiplicity << " times";
      out.issues.push_back({ViolationKind::RecoveredMultiEdge, {u, w}, os.str()});
    }
  }

  // Strands made only of false vertices close up into curves without ends.
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_false(v) || e.degree(v) != 4) continue;
    for (int parity = 0; parity < 2; ++parity) {
      if (covered[2 * v + parity]) continue;
      std::ostringstream os;
      os << "closed strand of false vertices through " << v;
      out.issues.push_back({ViolationKind::RecoveredLoop, {v}, os.str()});
      // Mark the whole cycle so it is reported once.
      VertexId prev = e.neighbor(v, parity), cur = v;
      for (int steps = 0; g.is_false(cur) && e.degree(cur) == 4 && steps <= n; ++steps) {
        const int j = *e.position(cur, prev);
        if (covered[2 * cur + j % 2]) break;
        covered[2 * cur + j % 2] = 1;
        prev = cur;
        cur = e.neighbor(cur, j + 2);
      }
    }
  }
  return out;
}

}  // namespace

ValidationReport validate(const AssociatedPlaneGraph& g) {
  const PlaneEmbedding& e = g.embedding();
  ValidationReport report;
  for (VertexId v : g.false_vertices()) {
    if (e.degree(v) != 4) {
      std::ostringstream os;
      os << "false vertex " << v << " has degree " << e.degree(v);
      report.violations.push_back({ViolationKind::FalseVertexDegree, {v}, os.str()});
    }
  }
  for (VertexId v : g.false_vertices()) {
    for (VertexId u : e.neighbors(v)) {
      if (u > v && g.is_false(u)) {
        std::ostringstream os;
        os << "false vertices " << v << " and " << u << " are adjacent";
        report.violations.push_back({ViolationKind::AdjacentFalseVertices, {v, u}, os.str()});
      }
    }
  }
  StrandTrace trace = trace_strands(g);
  for (auto& issue : trace.issues) report.violations.push_back(std::move(issue));
  return report;
}

OriginalGraphView::OriginalGraphView(std::vector<VertexId> vertices,
                                     std::vector<std::pair<VertexId, VertexId>> edges,
                                     std::size_t id_space)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), degree_(id_space, 0) {
  for (auto& [u, v] : edges_)
    if (u > v) std::swap(u, v);
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    ++degree_[u];
    ++degree_[v];
    edge_set_.emplace(u, v);
  }
}

bool OriginalGraphView::has_edge(VertexId u, VertexId v) const {
  return edge_set_.contains({std::min(u, v), std::max(u, v)});
}

int OriginalGraphView::min_degree() const {
  if (vertices_.empty()) return 0;
  int best = degree_[vertices_.front()];
  for (VertexId v : vertices_) best = std::min(best, degree_[v]);
  return best;
}

OriginalGraphView recover_original(const AssociatedPlaneGraph& g) {
  StrandTrace trace = trace_strands(g);
  if (trace.unfollowable)
    throw std::invalid_argument("cannot follow an edge through a false vertex of degree != 4");
  if (!trace.issues.empty())
    throw RecoveryError(trace.issues.front().kind, trace.issues.front().message);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, w] : trace.ends)
    if (u < w) edges.emplace_back(u, w);
  return OriginalGraphView(g.true_vertices(), std::move(edges), g.num_vertices());
}

std::vector<CrossingNeighborhood> crossing_neighborhoods(const AssociatedPlaneGraph& g) {
  const PlaneEmbedding& e = g.embedding();
  std::vector<CrossingNeighborhood> out;
  for (VertexId v : g.false_vertices()) {
    if (e.degree(v) != 4) continue;
    const auto nbrs = e.neighbors(v);
    const int start =
        static_cast<int>(std::min_element(nbrs.begin(), nbrs.end()) - nbrs.begin());
    CrossingNeighborhood cn{v, {}, {}};
    for (int i = 0; i < 4; ++i) {
      cn.endpoints[i] = e.neighbor(v, start + i);
      cn.faces[i] = e.corner_face(v, start + i);
    }
    out.push_back(cn);
  }
  return out;
}

DiagnosticsReport minimality_diagnostics(const AssociatedPlaneGraph& g) {
  const PlaneEmbedding& e = g.embedding();
  DiagnosticsReport report;
  const int n = static_cast<int>(g.num_vertices());

  for (VertexId v = 0; v < n; ++v) {
    if (g.is_false(v)) continue;
    const int d = e.degree(v);

    if (d == 3) {
      int triangles = 0, false_nbrs = 0;
      bool large = false;
      for (int i = 0; i < d; ++i) {
        const int fd = e.face_degree(e.corner_face(v, i));
        triangles += fd == 3;
        large = large || fd >= 5;
        false_nbrs += g.is_false(e.neighbor(v, i));
      }
      if (triangles >= 2 && false_nbrs >= 2 && !large)
        report.findings.push_back({DiagnosticKind::ThreeVertexWithoutLargeFace, {v}});
    }

    if (d == 4) {
      bool all = true;
      for (int i = 0; i < 4 && all; ++i) {
        const FaceId f = e.corner_face(v, i);
        all = e.face_degree(f) == 3 && g.is_false_face(f);
      }
      if (all) report.findings.push_back({DiagnosticKind::FourVertexInFalseTriangles, {v}});
    }
  }

  for (VertexId u : g.false_vertices()) {
    for (int i = 0; i < e.degree(u); ++i) {
      const VertexId v = e.neighbor(u, i);
      if (e.degree(v) != 3) continue;
      const HalfEdgeId h = e.half_edge(u, i);
      if (e.face_degree(e.face_of(h)) == 3 && e.face_degree(e.face_of(e.twin(h))) == 3)
        report.findings.push_back({DiagnosticKind::FalseEdgeBetweenTriangles, {u, v}});
    }
  }
  return report;
}

}  // namespace onelight
