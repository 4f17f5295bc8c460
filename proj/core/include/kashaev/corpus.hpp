#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kashaev/braid.hpp"
#include "kashaev/diagram.hpp"

namespace kashaev {

/// Names of the built-in diagrams (the .pd files, without extension).
std::vector<std::string> corpus_names();

/// Source text of a built-in diagram; throws ValidationError if unknown.
std::string_view corpus_text(std::string_view name);

ColoredDiagram corpus_diagram(std::string_view name);

struct CorpusBraid {
  BraidWord braid;
  /// Components are colored 1, 2, ..., colors, colors, ... in component order.
  int colors = 1;
};

/// Braid lines of the built-in braids file, `strands: letters [/ colors]`.
std::vector<CorpusBraid> corpus_braids();

/// Parses the braids file format.
std::vector<CorpusBraid> parse_braid_list(std::string_view text);

/// Closure of a corpus braid with its coloring and a valid mark.
ColoredDiagram corpus_braid_diagram(const CorpusBraid& b);

}  // namespace kashaev
