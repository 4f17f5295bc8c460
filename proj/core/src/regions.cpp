#include "kashaev/regions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kashaev/error.hpp"

namespace kashaev {

namespace {

SlotRef other_end(const ColoredDiagram& d, int v, int s) {
  const int e = d.crossing(static_cast<std::size_t>(v)).slots[static_cast<std::size_t>(s)];
  const SlotRef h = d.edge_head(e);
  if (h.crossing == v && h.slot == s) return d.edge_tail(e);
  return h;
}

}  // namespace

RegionMap compute_regions(const ColoredDiagram& d) {
  const std::size_t n = d.num_crossings();
  std::vector<std::array<int, 4>> face(n, {-1, -1, -1, -1});
  int num_faces = 0;

  // Walking along the edge at slot i+1 keeps the face on the right; at the
  // far end the same face sits at the corner that starts at the arrival slot.
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    for (int i0 = 0; i0 < 4; ++i0) {
      if (face[v0][static_cast<std::size_t>(i0)] >= 0) continue;
      int v = static_cast<int>(v0);
      int i = i0;
      while (face[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] < 0) {
        face[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = num_faces;
        const SlotRef next = other_end(d, v, (i + 1) % 4);
        v = next.crossing;
        i = next.slot;
      }
      ++num_faces;
    }
  }

  // Merge one face per connected piece into the common outer face.
  std::vector<int> parent(static_cast<std::size_t>(num_faces));
  std::iota(parent.begin(), parent.end(), 0);
  std::map<int, int> first_crossing_of_piece;
  for (std::size_t v = 0; v < n; ++v) first_crossing_of_piece.emplace(d.crossing_graph_component()[v], static_cast<int>(v));
  int outer_face = -1;
  for (const auto& [piece, v] : first_crossing_of_piece) {
    const int f = face[static_cast<std::size_t>(v)][0];
    if (outer_face < 0) {
      outer_face = f;
    } else {
      parent[static_cast<std::size_t>(f)] = outer_face;
    }
  }

  // Canonical ids: faces in order of their smallest corner.
  std::vector<int> face_to_region(static_cast<std::size_t>(num_faces), -1);
  RegionMap r;
  r.corner_region.assign(n, {-1, -1, -1, -1});
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 0; i < 4; ++i) {
      const int f = parent[static_cast<std::size_t>(face[v][static_cast<std::size_t>(i)])];
      int& id = face_to_region[static_cast<std::size_t>(f)];
      if (id < 0) {
        id = static_cast<int>(r.regions.size());
        r.regions.emplace_back();
      }
      r.regions[static_cast<std::size_t>(id)].push_back(Corner{static_cast<int>(v), i});
      r.corner_region[v][static_cast<std::size_t>(i)] = id;
    }
  }
  if (outer_face >= 0) {
    r.outer = face_to_region[static_cast<std::size_t>(outer_face)];
  } else {
    r.outer = static_cast<int>(r.regions.size());
    r.regions.emplace_back();
  }
  for (std::size_t c = 0; c < d.circle_edges().size(); ++c) {
    r.circle_inside.push_back(static_cast<int>(r.regions.size()));
    r.regions.emplace_back();
  }
  return r;
}

CrossingFrame crossing_frame(const ColoredDiagram& d, const RegionMap& r, std::size_t v) {
  const Crossing& x = d.crossing(v);
  const int c = x.incoming_corner;
  CrossingFrame f;
  f.corners = {(c + 2) % 4, (c + 3) % 4, c, (c + 1) % 4};
  f.a = r.region_at(static_cast<int>(v), f.corners[0]);
  f.b = r.region_at(static_cast<int>(v), f.corners[1]);
  f.c = r.region_at(static_cast<int>(v), f.corners[2]);
  f.d = r.region_at(static_cast<int>(v), f.corners[3]);
  f.j = x.color_j;
  f.k = x.color_k;
  return f;
}

std::pair<int, int> regions_beside_edge(const ColoredDiagram& d, const RegionMap& r, int edge) {
  if (d.is_circle_edge(edge)) {
    const auto& circles = d.circle_edges();
    const auto it = std::find(circles.begin(), circles.end(), edge);
    return {r.outer, r.circle_inside[static_cast<std::size_t>(it - circles.begin())]};
  }
  const SlotRef h = d.edge_head(edge);
  const int left = r.region_at(h.crossing, (h.slot + 3) % 4);
  const int right = r.region_at(h.crossing, h.slot);
  return {std::min(left, right), std::max(left, right)};
}

std::pair<int, int> marked_regions(const ColoredDiagram& d, const RegionMap& r) {
  auto sides = regions_beside_edge(d, r, d.marked_edge());
  if (sides.first == sides.second) {
    throw ValidationError("the marked edge " + std::to_string(d.edge_label(d.marked_edge())) +
                          " has the same region on both sides; choose another mark");
  }
  return sides;
}

}  // namespace kashaev
