#include "kashaev/oracle.hpp"

#include <map>
#include <numeric>

#include "kashaev/error.hpp"
#include "kashaev/invariants.hpp"
#include "kashaev/linalg.hpp"

namespace kashaev {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

WirtingerPresentation wirtinger(const ColoredDiagram& d) {
  if (d.num_crossings() == 0) throw ValidationError("Wirtinger presentation needs at least one crossing");
  if (!is_connected(d)) throw ValidationError("Wirtinger oracle needs a connected diagram");

  std::vector<int> parent(d.num_edges());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Crossing& x : d.crossings()) {
    parent[static_cast<std::size_t>(find(parent, x.slots[1]))] = find(parent, x.slots[3]);
  }
  std::map<int, int> arc_of_root;
  WirtingerPresentation w;
  w.num_vars = static_cast<std::size_t>(d.num_colors());
  std::vector<int> arc(d.num_edges());
  for (std::size_t e = 0; e < d.num_edges(); ++e) {
    const int root = find(parent, static_cast<int>(e));
    auto [it, inserted] = arc_of_root.emplace(root, static_cast<int>(w.arc_colors.size()));
    if (inserted) w.arc_colors.push_back(d.edge_color(static_cast<int>(e)));
    arc[e] = it->second;
  }
  w.has_overpass_only_component = w.arc_colors.size() != d.num_crossings();

  for (const Crossing& x : d.crossings()) {
    WirtingerRelation r;
    r.over = arc[static_cast<std::size_t>(x.slots[1])];
    r.in = arc[static_cast<std::size_t>(x.slots[0])];
    r.out = arc[static_cast<std::size_t>(x.slots[2])];
    r.sign = x.sign;
    r.word = {{r.over, x.sign}, {r.in, 1}, {r.over, -x.sign}, {r.out, -1}};
    w.relations.push_back(std::move(r));
  }
  return w;
}

std::vector<LaurentPoly> fox_matrix(const WirtingerPresentation& w) {
  const std::size_t n = w.num_vars;
  const std::size_t arcs = w.arc_colors.size();
  std::vector<LaurentPoly> m(w.relations.size() * arcs, LaurentPoly(n));
  for (std::size_t i = 0; i < w.relations.size(); ++i) {
    Exponents prefix(n, 0);
    for (const Letter& l : w.relations[i].word) {
      const auto c = static_cast<std::size_t>(w.arc_colors[static_cast<std::size_t>(l.arc)] - 1);
      LaurentPoly& cell = m[i * arcs + static_cast<std::size_t>(l.arc)];
      if (l.power > 0) {
        cell += LaurentPoly::monomial(n, prefix);
        prefix[c] += 2;
      } else {
        prefix[c] -= 2;
        cell -= LaurentPoly::monomial(n, prefix);
      }
    }
  }
  return m;
}

bool fox_rows_balanced(const WirtingerPresentation& w, const std::vector<LaurentPoly>& fox) {
  const std::size_t arcs = w.arc_colors.size();
  for (std::size_t i = 0; i < w.relations.size(); ++i) {
    Rational sum = 0;
    for (std::size_t a = 0; a < arcs; ++a) {
      for (const Term& t : fox[i * arcs + a].terms()) sum += t.coeff;
    }
    if (sum != 0) return false;
  }
  return true;
}

bool compare_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  const Term& la = a.leading_term();
  const Term& lb = b.leading_term();
  Exponents delta(a.num_vars());
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = la.exponents[i] - lb.exponents[i];
  const LaurentPoly moved = b.shifted(delta);
  if (la.coeff == lb.coeff) return moved == a;
  if (la.coeff == -lb.coeff) return -moved == a;
  return false;
}

FoxAlexander alexander_via_fox(const WirtingerPresentation& w) {
  const std::size_t n = w.num_vars;
  const std::size_t arcs = w.arc_colors.size();
  FoxAlexander out;
  if (w.has_overpass_only_component) {
    out.conclusive = true;
    out.polynomial = LaurentPoly(n);
    out.note = "a component never passes under; the link is split";
    return out;
  }

  std::vector<std::size_t> per_color(n + 1, 0);
  for (int c : w.arc_colors) ++per_color[static_cast<std::size_t>(c)];
  int color = 1;
  for (std::size_t c = 1; c <= n; ++c) {
    if (per_color[c] >= 2) {
      color = static_cast<int>(c);
      break;
    }
  }
  for (std::size_t a = 0; a < arcs; ++a) {
    if (w.arc_colors[a] == color) {
      out.deleted_arc = static_cast<int>(a);
      break;
    }
  }

  const std::vector<LaurentPoly> fox = fox_matrix(w);
  const LaurentPoly divisor =
      LaurentPoly::variable(n, static_cast<std::size_t>(color - 1)) - LaurentPoly::constant(n, 1);
  std::vector<LaurentPoly> candidates;
  for (std::size_t skip = 0; skip < w.relations.size(); ++skip) {
    std::vector<LaurentPoly> minor;
    for (std::size_t i = 0; i < w.relations.size(); ++i) {
      if (i == skip) continue;
      for (std::size_t a = 0; a < arcs; ++a) {
        if (static_cast<int>(a) != out.deleted_arc) minor.push_back(fox[i * arcs + a]);
      }
    }
    LaurentPoly det = det_bareiss(std::move(minor), arcs - 1, n);
    if (n >= 2) {
      LaurentPoly q;
      if (!try_exact_div(det, divisor, q)) {
        out.note = "a maximal minor is not divisible by (t" + std::to_string(color) + " - 1)";
        return out;
      }
      det = std::move(q);
    }
    candidates.push_back(std::move(det));
  }
  out.candidates = candidates.size();
  for (const auto& c : candidates) {
    if (!compare_up_to_units(c, candidates.front())) {
      out.note = "maximal minors disagree up to units";
      return out;
    }
  }
  out.conclusive = true;
  out.polynomial = symmetrize(candidates.front());
  return out;
}

}  // namespace kashaev
