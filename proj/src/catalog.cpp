#include <algorithm>
#include <functional>
#include <map>

#include "onelight/generators.hpp"

namespace onelight {

namespace {

struct Fixture {
  std::vector<std::vector<VertexId>> rotation;
  std::vector<VertexId> crossings;
};

AssociatedPlaneGraph from_fixture(const Fixture& fx) {
  std::vector<bool> marks(fx.rotation.size(), false);
  for (VertexId v : fx.crossings) marks[v] = true;
  return AssociatedPlaneGraph::from_rotation(RotationSystem{fx.rotation}, std::move(marks));
}

// Rotations read off convex polyhedra (counterclockwise seen from outside)
// and off straight-line drawings with the crossings made into vertices.
const Fixture kTetrahedron{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {}};

const Fixture kOctahedron{
    {{2, 4, 3, 5}, {2, 5, 3, 4}, {0, 5, 1, 4}, {0, 4, 1, 5}, {0, 2, 1, 3}, {0, 3, 1, 2}}, {}};

const Fixture kIcosahedron{{{1, 2, 6, 5, 7},
                            {0, 7, 3, 8, 2},
                            {0, 1, 8, 4, 6},
                            {1, 7, 11, 9, 8},
                            {2, 8, 9, 10, 6},
                            {0, 6, 10, 11, 7},
                            {0, 2, 4, 10, 5},
                            {0, 5, 11, 3, 1},
                            {1, 3, 9, 4, 2},
                            {3, 11, 10, 4, 8},
                            {4, 9, 11, 5, 6},
                            {3, 7, 5, 10, 9}},
                           {}};

// Outer triangle 0,1,2 with 3 and 4 inside; 0-4 crosses 1-3 at vertex 5.
const Fixture kK5OneCrossing{
    {{1, 5, 3, 2}, {2, 4, 5, 0}, {0, 3, 4, 1}, {0, 5, 4, 2}, {5, 1, 2, 3}, {0, 1, 4, 3}}, {5}};

const Fixture kK6ThreeCrossings{{{3, 6, 2, 4, 7},
                                 {3, 5, 8, 2, 6},
                                 {0, 6, 1, 8, 4},
                                 {1, 6, 0, 7, 5},
                                 {7, 0, 2, 8, 5},
                                 {3, 7, 4, 8, 1},
                                 {3, 1, 2, 0},
                                 {3, 0, 4, 5},
                                 {2, 1, 5, 4}},
                                {6, 7, 8}};

const std::map<std::string, std::function<AssociatedPlaneGraph()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<AssociatedPlaneGraph()>, std::less<>> entries{
      {"k4", [] { return from_fixture(kTetrahedron); }},
      {"octahedron", [] { return from_fixture(kOctahedron); }},
      {"cube", [] { return AssociatedPlaneGraph::from_rotation(cube(), std::vector<bool>(8, false)); }},
      {"icosahedron", [] { return from_fixture(kIcosahedron); }},
      {"k5-one-crossing", [] { return from_fixture(kK5OneCrossing); }},
      {"k6-three-crossings", [] { return from_fixture(kK6ThreeCrossings); }},
      {"cube-diagonals", [] { return quadrangulation_diagonals(cube()); }},
  };
  return entries;
}

}  // namespace

RotationSystem four_cycle() { return RotationSystem{{{1, 3}, {2, 0}, {3, 1}, {0, 2}}}; }

RotationSystem cube() {
  return RotationSystem{
      {{1, 2, 4}, {0, 5, 3}, {0, 3, 6}, {1, 7, 2}, {0, 6, 5}, {1, 4, 7}, {2, 7, 4}, {3, 5, 6}}};
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : registry()) names.push_back(name);
  return names;
}

AssociatedPlaneGraph catalog(std::string_view name) {
  const auto& entries = registry();
  auto it = entries.find(name);
  if (it == entries.end())
    throw GenerationError(GenerationErrorKind::UnknownCatalogName, "unknown catalog graph: " + std::string(name));
  return it->second();
}

}  // namespace onelight
