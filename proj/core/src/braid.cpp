#include "kashaev/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kashaev/error.hpp"
#include "kashaev/regions.hpp"

namespace kashaev {

BraidWord parse_braid(std::string_view text) {
  BraidWord b;
  std::string s(text);
  for (char& c : s) {
    if (c == ':' || c == ',') c = ' ';
  }
  std::istringstream in(s);
  if (!(in >> b.strands) || b.strands < 1) throw ValidationError("braid: expected a strand count");
  int g = 0;
  while (in >> g) {
    if (g == 0 || std::abs(g) >= b.strands) {
      throw ValidationError("braid: generator " + std::to_string(g) + " out of range");
    }
    b.letters.push_back(g);
  }
  if (!in.eof()) throw ValidationError("braid: malformed generator list");
  return b;
}

PdCode braid_closure(const BraidWord& braid) {
  std::vector<int> position(static_cast<std::size_t>(braid.strands));
  std::iota(position.begin(), position.end(), 1);
  int next_label = braid.strands + 1;
  std::vector<std::array<int, 4>> raw;

  for (int letter : braid.letters) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    const int a = position[i];      // enters bottom-left
    const int b = position[i + 1];  // enters bottom-right
    const int c = next_label++;     // leaves top-left
    const int d = next_label++;     // leaves top-right
    // Counterclockwise from the incoming under-edge; the bottom-left strand
    // goes over in a positive crossing.
    if (letter > 0) {
      raw.push_back({b, d, c, a});
    } else {
      raw.push_back({a, b, d, c});
    }
    position[i] = c;
    position[i + 1] = d;
  }

  // Close up: the top edge at each position is the bottom edge there.
  std::map<int, int> rename;
  for (int p = 0; p < braid.strands; ++p) rename[position[static_cast<std::size_t>(p)]] = p + 1;
  auto label = [&](int e) {
    auto it = rename.find(e);
    return it == rename.end() ? e : it->second;
  };

  std::map<int, int> compact;
  PdCode pd;
  auto compact_label = [&](int e) {
    auto [it, inserted] = compact.emplace(e, static_cast<int>(compact.size()) + 1);
    return it->second;
  };
  for (auto& x : raw) {
    std::array<int, 4> y{};
    for (std::size_t s = 0; s < 4; ++s) y[s] = compact_label(label(x[s]));
    pd.crossings.push_back(y);
  }
  for (int p = 0; p < braid.strands; ++p) {
    if (position[static_cast<std::size_t>(p)] == p + 1) pd.circles.push_back(compact_label(p + 1));
  }
  pd.default_color = 1;
  return pd;
}

BraidWord random_connected_braid(std::mt19937_64& rng, const RandomDiagramOptions& opts) {
  BraidWord b;
  b.strands = opts.min_strands + static_cast<int>(draw_index(rng, static_cast<std::size_t>(opts.max_strands - opts.min_strands + 1)));
  const int min_len = std::max(b.strands - 1, 1);
  const int max_len = std::max(opts.max_crossings, min_len);
  const int len = min_len + static_cast<int>(draw_index(rng, static_cast<std::size_t>(max_len - min_len + 1)));
  for (int g = 1; g < b.strands; ++g) b.letters.push_back(g);
  while (static_cast<int>(b.letters.size()) < len) {
    b.letters.push_back(1 + static_cast<int>(draw_index(rng, static_cast<std::size_t>(b.strands - 1))));
  }
  for (auto& g : b.letters) {
    if (draw_index(rng, 2) == 1) g = -g;
  }
  for (std::size_t i = b.letters.size(); i > 1; --i) std::swap(b.letters[i - 1], b.letters[draw_index(rng, i)]);
  return b;
}

ColoredDiagram random_coloring(std::mt19937_64& rng, const ColoredDiagram& d, int mu) {
  const std::size_t nc = d.num_components();
  if (mu < 1 || static_cast<std::size_t>(mu) > nc) throw ValidationError("random_coloring: bad color count");
  std::vector<std::size_t> order(nc);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = nc; i > 1; --i) std::swap(order[i - 1], order[draw_index(rng, i)]);
  std::vector<int> comp_color(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    comp_color[order[i]] = i < static_cast<std::size_t>(mu)
                               ? static_cast<int>(i) + 1
                               : 1 + static_cast<int>(draw_index(rng, static_cast<std::size_t>(mu)));
  }
  std::vector<int> colors(d.num_edges());
  for (std::size_t e = 0; e < d.num_edges(); ++e) colors[e] = comp_color[static_cast<std::size_t>(d.edge_component(static_cast<int>(e)))];
  ColoredDiagram out = d.recolored(colors);

  const RegionMap r = compute_regions(out);
  for (std::size_t e = 0; e < out.num_edges(); ++e) {
    if (out.edge_color(static_cast<int>(e)) != 1) continue;
    auto [p, q] = regions_beside_edge(out, r, static_cast<int>(e));
    if (p != q) return out.with_mark(out.edge_label(static_cast<int>(e)));
  }
  throw ValidationError("random_coloring: no color-1 edge separates two regions");
}

ColoredDiagram random_connected_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opts) {
  for (;;) {
    const BraidWord b = random_connected_braid(rng, opts);
    const ColoredDiagram base = ColoredDiagram::from_pd(braid_closure(b));
    const int max_mu = std::min<int>(opts.max_colors, static_cast<int>(base.num_components()));
    const int mu = 1 + static_cast<int>(draw_index(rng, static_cast<std::size_t>(max_mu)));
    try {
      return random_coloring(rng, base, mu);
    } catch (const ValidationError&) {
      // no markable color-1 edge; draw again
    }
  }
}

}  // namespace kashaev
