#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace kashaev {

/// Raw colored PD code as written by the user: edge labels are arbitrary
/// positive integers, crossings list four labels counterclockwise starting
/// from the incoming under-strand.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  /// Labels of crossingless circle components (`O[e]` records).
  std::vector<int> circles;
  /// Edge label -> color (1-based).
  std::map<int, int> colors;
  std::optional<int> default_color;
  std::optional<int> mark;
};

/// Parses the line-oriented colored-PD text format:
///
///     # comment
///     X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]
///     O[7]
///     colors: default=1, 7=2
///     mark: 1
///
/// An optional `PD[...]` wrapper and commas between records are accepted.
/// Without any `colors:` line every edge gets color 1.
PdCode parse_pd_text(std::string_view text);
/// JSON mirror: {"crossings": [[a,b,c,d],...], "circles": [e,...],
/// "colors": {"<edge>": c, "default": c}, "mark": e}.
PdCode parse_pd_json(const nlohmann::json& j);
std::string format_pd_text(const PdCode& pd);
nlohmann::json pd_to_json(const PdCode& pd);

struct Crossing {
  /// Internal edge indices, counterclockwise from the incoming under-edge.
  std::array<int, 4> slots{};
  int sign = 0;
  /// Corner bounded by both incoming edges (0 or 3). Corner i lies between
  /// slot i and slot i+1 (mod 4).
  int incoming_corner = 0;
  /// Colors of the strands bounding the frame corners b (j) and d (k).
  int color_j = 0;
  int color_k = 0;

  bool monochromatic() const { return color_j == color_k; }
  /// Slot index holding the incoming over-edge (1 or 3).
  int incoming_over_slot() const { return incoming_corner == 0 ? 1 : 3; }
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

struct Component {
  /// Internal edge indices in traversal order.
  std::vector<int> edges;
  int color = 0;
  bool circle = false;
};

/// A validated mu-colored link diagram. Immutable after construction.
class ColoredDiagram {
 public:
  /// Validates and builds. Throws ValidationError on malformed or
  /// inconsistent input.
  static ColoredDiagram from_pd(const PdCode& pd);

  std::size_t num_crossings() const { return crossings_.size(); }
  std::size_t num_edges() const { return edge_labels_.size(); }
  int num_colors() const { return num_colors_; }
  std::size_t num_components() const { return components_.size(); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t v) const { return crossings_.at(v); }
  const std::vector<Component>& components() const { return components_; }

  int edge_label(int edge) const { return edge_labels_.at(static_cast<std::size_t>(edge)); }
  int edge_color(int edge) const { return edge_colors_.at(static_cast<std::size_t>(edge)); }
  int edge_component(int edge) const { return edge_components_.at(static_cast<std::size_t>(edge)); }
  /// Internal index of an edge label, or -1.
  int edge_index(int label) const;
  /// Where the edge ends (incoming) and starts (outgoing); both unset for circles.
  SlotRef edge_head(int edge) const { return heads_.at(static_cast<std::size_t>(edge)); }
  SlotRef edge_tail(int edge) const { return tails_.at(static_cast<std::size_t>(edge)); }
  bool is_circle_edge(int edge) const { return heads_.at(static_cast<std::size_t>(edge)).crossing < 0; }
  const std::vector<int>& circle_edges() const { return circle_edges_; }

  int marked_edge() const { return marked_edge_; }
  /// Copy with a different marked edge (given by label). The edge must have color 1.
  ColoredDiagram with_mark(int label) const;
  /// Copy with colors replaced per edge; used by merge_colors.
  ColoredDiagram recolored(const std::vector<int>& edge_colors) const;

  /// Component of the crossing graph containing each crossing; crossingless
  /// circles form their own components and are numbered after these.
  const std::vector<int>& crossing_graph_component() const { return crossing_graph_component_; }
  /// Number of connected pieces of the diagram (crossing-graph components
  /// plus crossingless circles).
  std::size_t num_diagram_pieces() const { return num_pieces_; }

  PdCode to_pd() const;

 private:
  void finalize_colors();

  std::vector<Crossing> crossings_;
  std::vector<int> edge_labels_;
  std::vector<int> edge_colors_;
  std::vector<int> edge_components_;
  std::vector<SlotRef> heads_;
  std::vector<SlotRef> tails_;
  std::vector<int> circle_edges_;
  std::vector<Component> components_;
  std::map<int, int> label_to_edge_;
  std::vector<int> crossing_graph_component_;
  std::size_t num_pieces_ = 0;
  int num_colors_ = 0;
  int marked_edge_ = -1;
};

/// Parses text (or JSON when the first non-space character is '{') and validates.
ColoredDiagram parse_pd(std::string_view text);

/// Sum of the signs of crossings whose two strands share a color.
int monochromatic_writhe(const ColoredDiagram& d);

/// Linking number of two distinct components (indices into components()).
int linking_number(const ColoredDiagram& d, std::size_t comp_a, std::size_t comp_b);

/// Sum of lk(K, K') over components K of color c1 and K' of color c2.
int color_linking_sum(const ColoredDiagram& d, int c1, int c2);

/// Identifies colors c1 and c2 (1-based, distinct) and renumbers colors
/// contiguously; the merged color is min(c1, c2).
ColoredDiagram merge_colors(const ColoredDiagram& d, int c1, int c2);

/// Whether the underlying 4-valent graph, together with crossingless
/// circles, is connected.
bool is_connected(const ColoredDiagram& d);

}  // namespace kashaev
