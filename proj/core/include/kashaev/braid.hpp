#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "kashaev/diagram.hpp"

namespace kashaev {

/// Braid word: +i is the positive generator sigma_i, -i its inverse
/// (1 <= i < strands). Strands run upward; sigma_i is a positive crossing.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

/// Parses "strands: g1 g2 ..." e.g. "3: 1 -2 1 -2".
BraidWord parse_braid(std::string_view text);

/// PD code of the braid closure with all edges colored 1 and no mark.
/// Strands never touched by a letter become crossingless circles.
PdCode braid_closure(const BraidWord& braid);

/// Deterministic index draw; avoids std::uniform_int_distribution, whose
/// output differs between standard libraries.
inline std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

struct RandomDiagramOptions {
  int min_strands = 2;
  int max_strands = 4;
  int max_crossings = 8;
  int max_colors = 3;
};

/// Random connected colored diagram from a braid closure in which every
/// generator occurs, colored surjectively onto 1..mu with mu at most the
/// number of components, and marked on a color-1 edge whose two sides are
/// different regions.
ColoredDiagram random_connected_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opts = {});

/// Same construction, returning the braid as well.
BraidWord random_connected_braid(std::mt19937_64& rng, const RandomDiagramOptions& opts);

/// Colors the components of `d` surjectively onto 1..mu (random assignment)
/// and moves the mark to a valid color-1 edge.
ColoredDiagram random_coloring(std::mt19937_64& rng, const ColoredDiagram& d, int mu);

}  // namespace kashaev
