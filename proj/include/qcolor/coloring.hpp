#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qcolor/graph.hpp"

namespace qcolor {

using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

/// Partial vertex coloring with colors 1..palette_bound. The color classes
/// are kept as the exact inverse of the assignment; a class lists its
/// members in assignment order.
class Coloring {
 public:
  Coloring(std::size_t n, Color palette_bound);

  std::size_t n() const noexcept { return assignment_.size(); }
  Color palette_bound() const noexcept { return palette_bound_; }

  Color color(Vertex v) const { return assignment_[v]; }
  bool is_colored(Vertex v) const { return assignment_[v] != kUncolored; }
  bool complete() const noexcept { return colored_ == assignment_.size(); }
  std::span<const Color> assignment() const noexcept { return assignment_; }

  /// Members of color class c, in the order they were assigned.
  std::span<const Vertex> color_class(Color c) const { return classes_[c]; }

  /// Assigns c to an uncolored vertex. Throws UsageError if c is outside the
  /// palette or v is already colored.
  void assign(Vertex v, Color c);

  std::size_t colors_used() const;

 private:
  std::vector<Color> assignment_;
  std::vector<std::vector<Vertex>> classes_;
  Color palette_bound_;
  std::size_t colored_ = 0;
};

struct VerifyReport {
  bool proper = false;
  std::size_t colors_used = 0;
  std::optional<Edge> violation;  ///< first monochromatic edge in canonical order
  bool within_bound = false;      ///< colors_used <= bound and max color <= bound

  bool ok() const noexcept { return proper && within_bound; }
};

/// Trusted checker: reads the graph directly and charges no queries.
/// Throws IncompleteColoringError if any vertex is uncolored.
VerifyReport verify_coloring(const Graph& graph, const Coloring& coloring, std::size_t bound);

/// Coloring file: header "n palette_bound", then one "vertex color" line per vertex.
void save_coloring(const Coloring& coloring, std::ostream& out);
Coloring load_coloring(std::istream& in);

}  // namespace qcolor
