#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onelight/embedding.hpp"
#include "onelight/oneplanar.hpp"

namespace onelight {

enum class GenerationErrorKind { UnknownCatalogName, NotQuadrangulation, GenerationFailed };

class GenerationError : public std::runtime_error {
 public:
  GenerationError(GenerationErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  GenerationErrorKind kind() const { return kind_; }

 private:
  GenerationErrorKind kind_;
};

std::vector<std::string> catalog_names();
// Throws GenerationError(UnknownCatalogName).
AssociatedPlaneGraph catalog(std::string_view name);

// Plane rotation systems used to seed the constructions.
RotationSystem four_cycle();
RotationSystem cube();

// Puts a crossing pair of diagonals into each listed face (all faces when
// the list is omitted). Throws GenerationError(NotQuadrangulation) unless
// every face is a 4-cycle, RecoveryError when the result is not simple.
AssociatedPlaneGraph quadrangulation_diagonals(const RotationSystem& q);
AssociatedPlaneGraph quadrangulation_diagonals(const RotationSystem& q, std::span<const FaceId> faces);

struct GeneratorParams {
  std::uint64_t seed = 1;
  int size = 12;                  // true vertices, >= 4
  double crossing_density = 0.5;  // fraction of quadrangles to cross
  // Low-degree vertices get extra uncrossed chords across their faces;
  // attempts whose recovered graph still has a smaller minimum degree are
  // discarded.
  int min_degree = 0;
  // Fraction of true-true edges to delete afterwards (never below degree 3,
  // never disconnecting).
  double edge_removal = 0.0;
  int max_attempts = 64;
};

// Deterministic in params. Grows a random quadrangulation from a 4-cycle by
// splitting faces (preferring high-degree corners) and nesting 4-cycles,
// then crosses quadrangles whose diagonals are not already edges and adds
// chords at vertices below min_degree. Throws
// GenerationError(GenerationFailed) when no attempt meets min_degree.
AssociatedPlaneGraph random_oneplane(const GeneratorParams& params);

}  // namespace onelight
