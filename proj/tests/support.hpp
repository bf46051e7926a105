#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "onelight/embedding.hpp"
#include "onelight/generators.hpp"
#include "onelight/oneplanar.hpp"

namespace fixtures {

using onelight::VertexId;

struct Drawing {
  std::vector<std::vector<VertexId>> rot;
  std::vector<bool> marks;

  onelight::AssociatedPlaneGraph graph() const {
    return onelight::AssociatedPlaneGraph::from_rotation(onelight::RotationSystem{rot}, marks);
  }
};

// K4 drawn with 0-2 crossing 1-3 at vertex 4; the outer face is 0 1 2 3.
inline Drawing k4_crossing() {
  return {{{1, 4, 3}, {2, 4, 0}, {4, 1, 3}, {0, 4, 2}, {0, 1, 2, 3}}, {false, false, false, false, true}};
}

// Where the outer face sits in each rotation of k4_crossing().
inline VertexId outer_after(VertexId v) {
  static const VertexId after[] = {3, 0, 1, 2};
  return after[v];
}

// Hangs `count` degree-1 vertices on v, inside the face that follows
// neighbor `after` in v's rotation.
inline void add_leaves(Drawing& d, VertexId v, VertexId after, int count) {
  for (int i = 0; i < count; ++i) {
    const auto x = static_cast<VertexId>(d.rot.size());
    auto& ring = d.rot[v];
    ring.insert(std::find(ring.begin(), ring.end(), after) + 1, x);
    d.rot.push_back({v});
    d.marks.push_back(false);
  }
}

// Raises the degree of a true vertex of k4_crossing() to `degree`.
inline void grow_to(Drawing& d, VertexId v, int degree) {
  add_leaves(d, v, outer_after(v), degree - static_cast<int>(d.rot[v].size()));
}

// Octahedron with two opposite vertices marked as crossings. Every face is a
// false triangle, so each true vertex is a 4-vertex surrounded by them.
inline Drawing octahedron_two_crossings() {
  return {{{2, 4, 3, 5}, {2, 5, 3, 4}, {0, 5, 1, 4}, {0, 4, 1, 5}, {0, 2, 1, 3}, {0, 3, 1, 2}},
          {false, false, true, true, false, false}};
}

}  // namespace fixtures

namespace corpus {

struct Instance {
  std::string name;
  onelight::AssociatedPlaneGraph graph;
};

// Catalog drawings followed by 200 seeded instances with 4 to 60 true
// vertices, crossing densities 0..1, some with deleted edges and some
// required to have minimum degree 3.
inline std::vector<Instance> build() {
  std::vector<Instance> out;
  for (const auto& name : onelight::catalog_names()) out.push_back({name, onelight::catalog(name)});
  for (int i = 0; i < 200; ++i) {
    onelight::GeneratorParams p;
    p.seed = 9001 + static_cast<std::uint64_t>(i);
    p.size = 4 + (i * 37) % 57;
    p.crossing_density = 0.25 * (i % 5);
    p.edge_removal = i % 7 == 3 ? 0.2 : 0.0;
    p.min_degree = i % 2 == 0 && p.size >= 8 ? 3 : 0;
    p.max_attempts = 256;
    std::string name = "seed" + std::to_string(p.seed) + "-n" + std::to_string(p.size);
    out.push_back({name, onelight::random_oneplane(p)});
  }
  return out;
}

}  // namespace corpus
