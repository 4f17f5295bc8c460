#include "kashaev/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "kashaev/error.hpp"
#include "kashaev/regions.hpp"

namespace kashaev {

// ---------------------------------------------------------------------------
// Text and JSON formats

namespace {

class Scanner {
 public:
  Scanner(std::string_view line, int line_no) : s_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool consume(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  int integer() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  void expect(char c) {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("PD syntax error on line " + std::to_string(line_no_) + ", column " +
                          std::to_string(pos_ + 1) + ": " + msg);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_no_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void parse_colors(std::string_view body, int line_no, PdCode& pd) {
  Scanner sc(body, line_no);
  while (!sc.done()) {
    if (sc.consume("default")) {
      sc.expect('=');
      pd.default_color = sc.integer();
      continue;
    }
    sc.consume("e");
    const int edge = sc.integer();
    sc.expect('=');
    const int color = sc.integer();
    if (!pd.colors.emplace(edge, color).second) {
      sc.fail("edge " + std::to_string(edge) + " colored twice");
    }
  }
}

}  // namespace

PdCode parse_pd_text(std::string_view text) {
  PdCode pd;
  int line_no = 0;
  std::size_t start = 0;
  int wrapper_depth = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("colors:")) {
      parse_colors(line.substr(7), line_no, pd);
      continue;
    }
    if (line.starts_with("mark:")) {
      Scanner sc(line.substr(5), line_no);
      if (pd.mark) sc.fail("mark given twice");
      pd.mark = sc.integer();
      if (!sc.done()) sc.fail("trailing characters after mark");
      continue;
    }

    Scanner sc(line, line_no);
    while (!sc.done()) {
      if (sc.consume("PD[")) {
        ++wrapper_depth;
      } else if (sc.consume("X[")) {
        std::array<int, 4> x{};
        for (int i = 0; i < 4; ++i) {
          if (i > 0) sc.expect(',');
          x[static_cast<std::size_t>(i)] = sc.integer();
        }
        sc.expect(']');
        pd.crossings.push_back(x);
      } else if (sc.consume("O[")) {
        pd.circles.push_back(sc.integer());
        sc.expect(']');
      } else if (sc.consume("]")) {
        if (wrapper_depth == 0) sc.fail("unbalanced ']'");
        --wrapper_depth;
      } else {
        sc.fail("expected X[...], O[...], colors: or mark:");
      }
    }
    if (start > text.size()) break;
  }
  if (wrapper_depth != 0) throw ValidationError("PD syntax error: unterminated PD[ wrapper");
  return pd;
}

PdCode parse_pd_json(const nlohmann::json& j) {
  PdCode pd;
  try {
    for (const auto& x : j.at("crossings")) {
      if (!x.is_array() || x.size() != 4) throw ValidationError("each crossing must list 4 edges");
      pd.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    if (j.contains("circles")) pd.circles = j.at("circles").get<std::vector<int>>();
    if (j.contains("colors")) {
      for (const auto& [key, value] : j.at("colors").items()) {
        if (key == "default") {
          pd.default_color = value.get<int>();
        } else {
          pd.colors[std::stoi(key)] = value.get<int>();
        }
      }
    }
    if (j.contains("mark") && !j.at("mark").is_null()) pd.mark = j.at("mark").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed PD JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed PD JSON: non-numeric color key");
  }
  return pd;
}

std::string format_pd_text(const PdCode& pd) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    out << (i ? " " : "") << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  if (!pd.crossings.empty()) out << "\n";
  for (int c : pd.circles) out << "O[" << c << "]\n";
  out << "colors:";
  bool first = true;
  if (pd.default_color) {
    out << " default=" << *pd.default_color;
    first = false;
  }
  for (const auto& [edge, color] : pd.colors) {
    out << (first ? " " : ", ") << edge << "=" << color;
    first = false;
  }
  out << "\n";
  if (pd.mark) out << "mark: " << *pd.mark << "\n";
  return out.str();
}

nlohmann::json pd_to_json(const PdCode& pd) {
  nlohmann::json j;
  j["crossings"] = pd.crossings;
  j["circles"] = pd.circles;
  nlohmann::json colors = nlohmann::json::object();
  if (pd.default_color) colors["default"] = *pd.default_color;
  for (const auto& [edge, color] : pd.colors) colors[std::to_string(edge)] = color;
  j["colors"] = colors;
  j["mark"] = pd.mark ? nlohmann::json(*pd.mark) : nlohmann::json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

enum class Dir : signed char { unknown = 0, in = 1, out = 2 };

// Solves for the direction of every over-strand slot. Under slots are fixed
// by the PD convention; each edge is incoming at exactly one of its two
// ends and each over-strand has one incoming slot.
std::vector<std::array<Dir, 4>> orient_slots(const std::vector<std::array<int, 4>>& slots,
                                             const std::vector<std::array<SlotRef, 2>>& occ,
                                             const std::vector<int>& labels) {
  const std::size_t n = slots.size();
  std::vector<std::array<Dir, 4>> dir(n);
  std::deque<SlotRef> work;
  auto set = [&](int v, int s, Dir d) {
    Dir& cur = dir[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
    if (cur == d) return;
    if (cur != Dir::unknown) {
      const int edge = slots[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      throw ValidationError("orientation inconsistency: edge " +
                            std::to_string(labels[static_cast<std::size_t>(edge)]) +
                            " is incoming (or outgoing) at both of its ends");
    }
    cur = d;
    work.push_back({v, s});
  };
  auto flip = [](Dir d) { return d == Dir::in ? Dir::out : Dir::in; };

  auto propagate = [&]() {
    while (!work.empty()) {
      SlotRef r = work.front();
      work.pop_front();
      const Dir d = dir[static_cast<std::size_t>(r.crossing)][static_cast<std::size_t>(r.slot)];
      const int edge = slots[static_cast<std::size_t>(r.crossing)][static_cast<std::size_t>(r.slot)];
      const auto& ends = occ[static_cast<std::size_t>(edge)];
      const SlotRef other = (ends[0].crossing == r.crossing && ends[0].slot == r.slot) ? ends[1] : ends[0];
      set(other.crossing, other.slot, flip(d));
      if (r.slot % 2 == 1) set(r.crossing, 4 - r.slot, flip(d));
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    set(static_cast<int>(v), 0, Dir::in);
    set(static_cast<int>(v), 2, Dir::out);
  }
  propagate();

  // Components that never pass under are oriented by increasing edge label,
  // the usual PD numbering convention.
  for (std::size_t v = 0; v < n; ++v) {
    if (dir[v][1] != Dir::unknown) continue;
    const int j = labels[static_cast<std::size_t>(slots[v][1])];
    const int l = labels[static_cast<std::size_t>(slots[v][3])];
    const bool l_incoming = (j - l == 1) || (l - j > 1);
    set(static_cast<int>(v), 3, l_incoming ? Dir::in : Dir::out);
    propagate();
  }
  return dir;
}

}  // namespace

int ColoredDiagram::edge_index(int label) const {
  auto it = label_to_edge_.find(label);
  return it == label_to_edge_.end() ? -1 : it->second;
}

ColoredDiagram ColoredDiagram::from_pd(const PdCode& pd) {
  ColoredDiagram d;
  if (pd.crossings.empty() && pd.circles.empty()) throw ValidationError("empty diagram");

  // Edge labels and occurrence counts.
  std::map<int, int> count;
  for (const auto& x : pd.crossings) {
    for (int e : x) {
      if (e <= 0) throw ValidationError("edge labels must be positive integers, got " + std::to_string(e));
      ++count[e];
    }
  }
  for (const auto& [label, c] : count) {
    if (c != 2) {
      throw ValidationError("edge " + std::to_string(label) + " appears " + std::to_string(c) +
                            " times; every edge must appear exactly twice");
    }
  }
  for (int c : pd.circles) {
    if (c <= 0) throw ValidationError("edge labels must be positive integers, got " + std::to_string(c));
    if (count.count(c)) {
      throw ValidationError("circle edge " + std::to_string(c) + " also appears in a crossing");
    }
    if (!count.emplace(c, 0).second) throw ValidationError("circle edge " + std::to_string(c) + " repeated");
  }
  for (const auto& [label, c] : count) {
    d.label_to_edge_[label] = static_cast<int>(d.edge_labels_.size());
    d.edge_labels_.push_back(label);
  }
  const std::size_t num_edges = d.edge_labels_.size();

  std::vector<std::array<int, 4>> slots;
  std::vector<std::array<SlotRef, 2>> occ(num_edges);
  std::vector<int> seen(num_edges, 0);
  for (std::size_t v = 0; v < pd.crossings.size(); ++v) {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) {
      const int e = d.label_to_edge_.at(pd.crossings[v][static_cast<std::size_t>(i)]);
      s[static_cast<std::size_t>(i)] = e;
      occ[static_cast<std::size_t>(e)][static_cast<std::size_t>(seen[static_cast<std::size_t>(e)]++)] =
          SlotRef{static_cast<int>(v), i};
    }
    slots.push_back(s);
  }

  const auto dir = orient_slots(slots, occ, d.edge_labels_);

  d.heads_.assign(num_edges, SlotRef{});
  d.tails_.assign(num_edges, SlotRef{});
  for (std::size_t v = 0; v < slots.size(); ++v) {
    for (int s = 0; s < 4; ++s) {
      const int e = slots[v][static_cast<std::size_t>(s)];
      SlotRef ref{static_cast<int>(v), s};
      if (dir[v][static_cast<std::size_t>(s)] == Dir::in) {
        d.heads_[static_cast<std::size_t>(e)] = ref;
      } else {
        d.tails_[static_cast<std::size_t>(e)] = ref;
      }
    }
  }

  // Crossings: sign and frame. The over strand runs between slots 1 and 3;
  // the crossing is positive when it enters at slot 3.
  for (const auto& s : slots) {
    Crossing x;
    x.slots = s;
    const std::size_t v = d.crossings_.size();
    const bool over_in_at_3 = dir[v][3] == Dir::in;
    x.sign = over_in_at_3 ? +1 : -1;
    x.incoming_corner = over_in_at_3 ? 3 : 0;
    d.crossings_.push_back(x);
  }

  // Components by following each edge through its head crossing.
  d.edge_components_.assign(num_edges, -1);
  for (std::size_t e0 = 0; e0 < num_edges; ++e0) {
    if (d.edge_components_[e0] >= 0) continue;
    Component comp;
    const int id = static_cast<int>(d.components_.size());
    int e = static_cast<int>(e0);
    if (d.heads_[e0].crossing < 0) {
      comp.circle = true;
      comp.edges.push_back(e);
      d.edge_components_[e0] = id;
    } else {
      while (d.edge_components_[static_cast<std::size_t>(e)] < 0) {
        d.edge_components_[static_cast<std::size_t>(e)] = id;
        comp.edges.push_back(e);
        const SlotRef h = d.heads_[static_cast<std::size_t>(e)];
        e = d.crossings_[static_cast<std::size_t>(h.crossing)].slots[static_cast<std::size_t>((h.slot + 2) % 4)];
      }
    }
    d.components_.push_back(std::move(comp));
  }
  for (std::size_t e = 0; e < num_edges; ++e) {
    if (d.heads_[e].crossing < 0) d.circle_edges_.push_back(static_cast<int>(e));
  }

  // Colors.
  d.edge_colors_.assign(num_edges, 0);
  for (const auto& [label, color] : pd.colors) {
    const int e = d.edge_index(label);
    if (e < 0) throw ValidationError("color given for unknown edge " + std::to_string(label));
    d.edge_colors_[static_cast<std::size_t>(e)] = color;
  }
  const bool no_color_info = pd.colors.empty() && !pd.default_color;
  for (std::size_t e = 0; e < num_edges; ++e) {
    if (d.edge_colors_[e] != 0) continue;
    if (pd.default_color) {
      d.edge_colors_[e] = *pd.default_color;
    } else if (no_color_info) {
      d.edge_colors_[e] = 1;
    } else {
      throw ValidationError("color map missing edge " + std::to_string(d.edge_labels_[e]));
    }
  }
  d.finalize_colors();

  // Mark.
  if (pd.mark) {
    const int e = d.edge_index(*pd.mark);
    if (e < 0) throw ValidationError("mark on unknown edge " + std::to_string(*pd.mark));
    if (d.edge_colors_[static_cast<std::size_t>(e)] != 1) {
      throw ValidationError("mark must lie on an edge of color 1; edge " + std::to_string(*pd.mark) +
                            " has color " + std::to_string(d.edge_colors_[static_cast<std::size_t>(e)]));
    }
    d.marked_edge_ = e;
  } else {
    for (std::size_t e = 0; e < num_edges; ++e) {
      if (d.edge_colors_[e] == 1) {
        d.marked_edge_ = static_cast<int>(e);
        break;
      }
    }
    if (d.marked_edge_ < 0) throw ValidationError("no edge of color 1 to carry the mark");
  }

  // Connected pieces of the crossing graph.
  std::vector<int> parent(d.crossings_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t e = 0; e < num_edges; ++e) {
    if (d.heads_[e].crossing < 0) continue;
    const int a = find(d.heads_[e].crossing);
    const int b = find(d.tails_[e].crossing);
    parent[static_cast<std::size_t>(a)] = b;
  }
  std::map<int, int> root_id;
  d.crossing_graph_component_.resize(d.crossings_.size());
  for (std::size_t v = 0; v < d.crossings_.size(); ++v) {
    auto [it, inserted] = root_id.emplace(find(static_cast<int>(v)), static_cast<int>(root_id.size()));
    d.crossing_graph_component_[v] = it->second;
  }
  d.num_pieces_ = root_id.size() + d.circle_edges_.size();

  // A PD code describes a planar diagram only if every connected piece
  // satisfies Euler's formula: faces = crossings + 2.
  const RegionMap regions = compute_regions(d);
  const std::size_t expected = d.crossings_.size() + d.num_pieces_ + 1;
  if (regions.num_regions() != expected) {
    throw ValidationError("PD code is not planar: found " + std::to_string(regions.num_regions()) +
                          " regions, expected " + std::to_string(expected));
  }
  return d;
}

void ColoredDiagram::finalize_colors() {
  std::set<int> used;
  for (auto& comp : components_) {
    comp.color = edge_colors_[static_cast<std::size_t>(comp.edges.front())];
    for (int e : comp.edges) {
      if (edge_colors_[static_cast<std::size_t>(e)] != comp.color) {
        throw ValidationError("edges " + std::to_string(edge_labels_[static_cast<std::size_t>(comp.edges.front())]) +
                              " and " + std::to_string(edge_labels_[static_cast<std::size_t>(e)]) +
                              " lie on one component but have different colors");
      }
    }
    if (comp.color < 1) throw ValidationError("colors must be positive, got " + std::to_string(comp.color));
    used.insert(comp.color);
  }
  num_colors_ = used.empty() ? 0 : *used.rbegin();
  for (int c = 1; c <= num_colors_; ++c) {
    if (!used.count(c)) throw ValidationError("color " + std::to_string(c) + " is not used by any component");
  }
  for (auto& x : crossings_) {
    const int c = x.incoming_corner;
    x.color_j = edge_colors_[static_cast<std::size_t>(x.slots[static_cast<std::size_t>(c)])];
    x.color_k = edge_colors_[static_cast<std::size_t>(x.slots[static_cast<std::size_t>((c + 1) % 4)])];
  }
}

ColoredDiagram ColoredDiagram::with_mark(int label) const {
  const int e = edge_index(label);
  if (e < 0) throw ValidationError("mark on unknown edge " + std::to_string(label));
  if (edge_color(e) != 1) throw ValidationError("mark must lie on an edge of color 1");
  ColoredDiagram out = *this;
  out.marked_edge_ = e;
  return out;
}

ColoredDiagram ColoredDiagram::recolored(const std::vector<int>& edge_colors) const {
  if (edge_colors.size() != num_edges()) throw std::invalid_argument("recolored: wrong number of colors");
  ColoredDiagram out = *this;
  out.edge_colors_ = edge_colors;
  out.finalize_colors();
  if (out.edge_color(out.marked_edge_) != 1) {
    for (std::size_t e = 0; e < out.num_edges(); ++e) {
      if (out.edge_colors_[e] == 1) {
        out.marked_edge_ = static_cast<int>(e);
        break;
      }
    }
  }
  return out;
}

PdCode ColoredDiagram::to_pd() const {
  PdCode pd;
  for (const auto& x : crossings_) {
    pd.crossings.push_back({edge_labels_[static_cast<std::size_t>(x.slots[0])],
                            edge_labels_[static_cast<std::size_t>(x.slots[1])],
                            edge_labels_[static_cast<std::size_t>(x.slots[2])],
                            edge_labels_[static_cast<std::size_t>(x.slots[3])]});
  }
  for (int e : circle_edges_) pd.circles.push_back(edge_labels_[static_cast<std::size_t>(e)]);
  for (std::size_t e = 0; e < num_edges(); ++e) pd.colors[edge_labels_[e]] = edge_colors_[e];
  pd.mark = edge_labels_[static_cast<std::size_t>(marked_edge_)];
  return pd;
}

ColoredDiagram parse_pd(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(std::string("malformed PD JSON: ") + e.what());
    }
    return ColoredDiagram::from_pd(parse_pd_json(j));
  }
  return ColoredDiagram::from_pd(parse_pd_text(text));
}

// ---------------------------------------------------------------------------
// Combinatorial invariants

int monochromatic_writhe(const ColoredDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) {
    if (x.monochromatic()) w += x.sign;
  }
  return w;
}

int linking_number(const ColoredDiagram& d, std::size_t comp_a, std::size_t comp_b) {
  if (comp_a >= d.num_components() || comp_b >= d.num_components()) {
    throw ValidationError("component index out of range");
  }
  if (comp_a == comp_b) throw ValidationError("linking number needs two distinct components");
  int twice = 0;
  for (const auto& x : d.crossings()) {
    const auto under = static_cast<std::size_t>(d.edge_component(x.slots[0]));
    const auto over = static_cast<std::size_t>(d.edge_component(x.slots[1]));
    if ((under == comp_a && over == comp_b) || (under == comp_b && over == comp_a)) twice += x.sign;
  }
  if (twice % 2 != 0) throw ConsistencyError("odd crossing-sign sum between two components");
  return twice / 2;
}

int color_linking_sum(const ColoredDiagram& d, int c1, int c2) {
  int total = 0;
  for (std::size_t a = 0; a < d.num_components(); ++a) {
    for (std::size_t b = 0; b < d.num_components(); ++b) {
      if (a == b) continue;
      if (d.components()[a].color == c1 && d.components()[b].color == c2) total += linking_number(d, a, b);
    }
  }
  return total;
}

ColoredDiagram merge_colors(const ColoredDiagram& d, int c1, int c2) {
  const int mu = d.num_colors();
  if (c1 < 1 || c1 > mu || c2 < 1 || c2 > mu) {
    throw ValidationError("merge_colors: color ids must lie in 1.." + std::to_string(mu));
  }
  if (c1 == c2) throw ValidationError("merge_colors: cannot merge a color with itself");
  const int keep = std::min(c1, c2);
  const int drop = std::max(c1, c2);
  std::vector<int> colors(d.num_edges());
  for (std::size_t e = 0; e < d.num_edges(); ++e) {
    int c = d.edge_color(static_cast<int>(e));
    if (c == drop) c = keep;
    if (c > drop) --c;
    colors[e] = c;
  }
  return d.recolored(colors);
}

bool is_connected(const ColoredDiagram& d) { return d.num_diagram_pieces() == 1; }

}  // namespace kashaev
