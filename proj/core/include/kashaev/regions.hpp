#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "kashaev/diagram.hpp"

namespace kashaev {

/// A corner of a crossing: `corner` i lies between slot i and slot i+1.
struct Corner {
  int crossing = 0;
  int corner = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Regions (faces) of a diagram, in canonical order: regions touching a
/// crossing sorted by their smallest (crossing, corner) incidence, then the
/// cornerless outer region of a crossingless diagram, then circle interiors.
///
/// Disconnected pieces are placed side by side: one face of each piece
/// (the one at corner 0 of its first crossing) merges into a common outer
/// region, which also surrounds every crossingless circle.
struct RegionMap {
  std::vector<std::vector<Corner>> regions;
  /// corner_region[v][i] is the region at corner i of crossing v.
  std::vector<std::array<int, 4>> corner_region;
  /// Interior region of each crossingless circle, aligned with
  /// ColoredDiagram::circle_edges().
  std::vector<int> circle_inside;
  /// Region surrounding all pieces.
  int outer = -1;

  std::size_t num_regions() const { return regions.size(); }
  int region_at(int crossing, int corner) const {
    return corner_region.at(static_cast<std::size_t>(crossing)).at(static_cast<std::size_t>(corner));
  }
};

RegionMap compute_regions(const ColoredDiagram& d);

/// Regions around a crossing in the frame of the local 4x4 block: a is the
/// corner between the outgoing edges, c between the incoming ones, b and d
/// the remaining corners, with j (resp. k) the color of the incoming strand
/// bounding b (resp. d). Entries may repeat when a region meets the
/// crossing from several sides.
struct CrossingFrame {
  int a = 0, b = 0, c = 0, d = 0;
  int j = 0, k = 0;
  std::array<int, 4> corners{};  // corner indices of a, b, c, d
};

CrossingFrame crossing_frame(const ColoredDiagram& d, const RegionMap& r, std::size_t v);

/// The two regions on either side of an edge.
std::pair<int, int> regions_beside_edge(const ColoredDiagram& d, const RegionMap& r, int edge);

/// Regions beside the marked edge. Throws ValidationError if both sides
/// are the same region.
std::pair<int, int> marked_regions(const ColoredDiagram& d, const RegionMap& r);

}  // namespace kashaev
