#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onelight/embedding.hpp"
#include "onelight/oneplanar.hpp"

namespace onelight {

// On-disk form of a plane graph with crossing marks, before any embedding
// checks.
struct GraphDocument {
  RotationSystem rotation;
  std::vector<bool> false_marks;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(const std::string& what, std::optional<std::size_t> byte_offset, std::string pointer)
      : std::runtime_error(what), byte_offset_(byte_offset), pointer_(std::move(pointer)) {}
  // Set for syntax errors.
  std::optional<std::size_t> byte_offset() const { return byte_offset_; }
  // JSON pointer to the offending value for schema errors.
  const std::string& pointer() const { return pointer_; }

 private:
  std::optional<std::size_t> byte_offset_;
  std::string pointer_;
};

GraphDocument parse_graph_document(std::string_view text);
std::string serialize_graph_document(const GraphDocument& doc);

GraphDocument to_document(const AssociatedPlaneGraph& g);
std::string serialize_graph(const AssociatedPlaneGraph& g);
// Parses and builds the embedding; embedding errors propagate as
// EmbeddingError.
AssociatedPlaneGraph parse_graph(std::string_view text);

}  // namespace onelight
