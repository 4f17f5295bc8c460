#include "kashaev/corpus.hpp"

#include <sstream>

#include "corpus_data.hpp"
#include "kashaev/error.hpp"
#include "kashaev/regions.hpp"

namespace kashaev {

namespace {

constexpr std::string_view kPdSuffix = ".pd";
constexpr std::string_view kBraidFile = "braids.braid";

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [file, text] : detail::corpus_files()) {
    if (file.ends_with(kPdSuffix)) out.emplace_back(file.substr(0, file.size() - kPdSuffix.size()));
  }
  return out;
}

std::string_view corpus_text(std::string_view name) {
  for (const auto& [file, text] : detail::corpus_files()) {
    if (file.ends_with(kPdSuffix) && file.substr(0, file.size() - kPdSuffix.size()) == name) return text;
  }
  throw ValidationError("no built-in diagram named '" + std::string(name) + "'");
}

ColoredDiagram corpus_diagram(std::string_view name) { return parse_pd(corpus_text(name)); }

std::vector<CorpusBraid> parse_braid_list(std::string_view text) {
  std::vector<CorpusBraid> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CorpusBraid b;
    if (auto slash = line.find('/'); slash != std::string::npos) {
      try {
        b.colors = std::stoi(line.substr(slash + 1));
      } catch (const std::exception&) {
        throw ValidationError("braid list: bad color count in '" + line + "'");
      }
      line.erase(slash);
    }
    b.braid = parse_braid(line);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<CorpusBraid> corpus_braids() {
  for (const auto& [file, text] : detail::corpus_files()) {
    if (file == kBraidFile) return parse_braid_list(text);
  }
  return {};
}

ColoredDiagram corpus_braid_diagram(const CorpusBraid& b) {
  const ColoredDiagram base = ColoredDiagram::from_pd(braid_closure(b.braid));
  if (b.colors < 1 || static_cast<std::size_t>(b.colors) > base.num_components()) {
    throw ValidationError("braid list: " + std::to_string(b.colors) + " colors for " +
                          std::to_string(base.num_components()) + " components");
  }
  std::vector<int> colors(base.num_edges());
  for (std::size_t e = 0; e < colors.size(); ++e) {
    colors[e] = std::min(base.edge_component(static_cast<int>(e)) + 1, b.colors);
  }
  const ColoredDiagram d = base.recolored(colors);
  const RegionMap r = compute_regions(d);
  for (std::size_t e = 0; e < d.num_edges(); ++e) {
    if (d.edge_color(static_cast<int>(e)) != 1) continue;
    auto [p, q] = regions_beside_edge(d, r, static_cast<int>(e));
    if (p != q) return d.with_mark(d.edge_label(static_cast<int>(e)));
  }
  throw ValidationError("braid closure has no color-1 edge between two distinct regions");
}

}  // namespace kashaev
