#include "kashaev/matrices.hpp"

#include <algorithm>
#include <cmath>

#include "kashaev/error.hpp"

namespace kashaev {

namespace {

// Half-step exponent vector with entries added for colors j and k.
Exponents exps(std::size_t n, int j, std::int32_t ej, int k, std::int32_t ek) {
  Exponents e(n, 0);
  e[static_cast<std::size_t>(j - 1)] += ej;
  e[static_cast<std::size_t>(k - 1)] += ek;
  return e;
}

// (m + m^-1) / 2 for the monomial with exponents e.
LaurentPoly half_sum(std::size_t n, Exponents e) {
  Exponents neg = e;
  for (auto& x : neg) x = -x;
  return LaurentPoly::monomial(n, std::move(e), Rational(1, 2)) +
         LaurentPoly::monomial(n, std::move(neg), Rational(1, 2));
}

void check_colors(std::size_t n, int j, int k) {
  if (j < 1 || k < 1 || static_cast<std::size_t>(j) > n || static_cast<std::size_t>(k) > n) {
    throw ValidationError("color index outside 1.." + std::to_string(n));
  }
}

std::vector<std::size_t> kept_rows(const std::vector<int>& order, const ColoredDiagram& d, const RegionMap& r) {
  const auto [p, q] = marked_regions(d, r);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != p && order[i] != q) keep.push_back(i);
  }
  return keep;
}

std::vector<int> canonical_order(const RegionMap& r) {
  std::vector<int> order(r.num_regions());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

std::array<std::array<LaurentPoly, 4>, 4> tau_local(std::size_t n, int j, int k) {
  check_colors(n, j, k);
  const LaurentPoly xj = half_sum(n, exps(n, j, 2, k, 0));
  const LaurentPoly xk = half_sum(n, exps(n, j, 0, k, 2));
  const LaurentPoly xjk = half_sum(n, exps(n, j, 2, k, 2));
  const LaurentPoly ybar = half_sum(n, exps(n, j, 2, k, -2));  // 2 x_j x_k - x_jk
  const LaurentPoly one = LaurentPoly::constant(n, 1);
  // Order a, b, c, d.
  return {{{xjk, xj, one, xk}, {xj, ybar, xk, one}, {one, xk, xjk, xj}, {xk, one, xj, ybar}}};
}

std::array<std::array<double, 4>, 4> tau_local_numeric(double tj, double tk) {
  const double xj = std::cos(tj / 2);
  const double xk = std::cos(tk / 2);
  const double xjk = std::cos((tj + tk) / 2);
  const double ybar = std::cos((tj - tk) / 2);
  return {{{xjk, xj, 1, xk}, {xj, ybar, xk, 1}, {1, xk, xjk, xj}, {xk, 1, xj, ybar}}};
}

RationalFn clasp_entry(std::size_t n, int sign, int j, int k) {
  check_colors(n, j, k);
  auto diff = [n](int c) {
    Exponents e(n, 0);
    e[static_cast<std::size_t>(c - 1)] = 2;
    Exponents f(n, 0);
    f[static_cast<std::size_t>(c - 1)] = -2;
    return LaurentPoly::monomial(n, e) - LaurentPoly::monomial(n, f);
  };
  return RationalFn(LaurentPoly::constant(n, -4 * sign), diff(j) * diff(k));
}

SymbolicSymMatrix build_tau_symbolic(const ColoredDiagram& d, const RegionMap& r) {
  const std::size_t n = static_cast<std::size_t>(d.num_colors());
  SymbolicSymMatrix m;
  m.num_vars = n;
  m.region_order = canonical_order(r);
  const std::size_t dim = m.dim();
  // Accumulate numerators per distinct prefactor, then divide once.
  std::vector<std::vector<LaurentPoly>> by_pair;
  std::vector<std::pair<int, std::pair<int, int>>> keys;
  for (std::size_t v = 0; v < d.num_crossings(); ++v) {
    const Crossing& x = d.crossing(v);
    const CrossingFrame f = crossing_frame(d, r, v);
    const std::pair<int, std::pair<int, int>> key{x.sign, std::minmax(f.j, f.k)};
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      by_pair.emplace_back(dim * dim, LaurentPoly(n));
      it = keys.end() - 1;
    }
    auto& acc = by_pair[static_cast<std::size_t>(it - keys.begin())];
    const auto block = tau_local(n, f.j, f.k);
    const std::array<int, 4> reg{f.a, f.b, f.c, f.d};
    for (std::size_t al = 0; al < 4; ++al) {
      for (std::size_t be = 0; be < 4; ++be) {
        acc[static_cast<std::size_t>(reg[al]) * dim + static_cast<std::size_t>(reg[be])] += block[al][be];
      }
    }
  }
  m.entries.assign(dim * dim, RationalFn(n));
  for (std::size_t g = 0; g < keys.size(); ++g) {
    const RationalFn pre = clasp_entry(n, keys[g].first, keys[g].second.first, keys[g].second.second);
    for (std::size_t i = 0; i < dim * dim; ++i) {
      if (!by_pair[g][i].is_zero()) m.entries[i] += pre * RationalFn(by_pair[g][i]);
    }
  }
  return m;
}

RealSymMatrix build_tau_numeric(const ColoredDiagram& d, const RegionMap& r, const TorusPoint& p) {
  if (p.dim() != static_cast<std::size_t>(d.num_colors())) {
    throw ValidationError("torus point has " + std::to_string(p.dim()) + " angles, diagram has " +
                          std::to_string(d.num_colors()) + " colors");
  }
  RealSymMatrix m;
  m.region_order = canonical_order(r);
  const std::size_t dim = m.dim();
  m.entries.assign(dim * dim, 0.0);
  for (std::size_t v = 0; v < d.num_crossings(); ++v) {
    const CrossingFrame f = crossing_frame(d, r, v);
    const double tj = p[static_cast<std::size_t>(f.j - 1)];
    const double tk = p[static_cast<std::size_t>(f.k - 1)];
    const double pre = d.crossing(v).sign / (std::sin(tj / 2) * std::sin(tk / 2));
    const auto block = tau_local_numeric(tj, tk);
    const std::array<int, 4> reg{f.a, f.b, f.c, f.d};
    // Each value goes to (p, q) and (q, p) in the same order, so the result
    // is symmetric without a post-hoc symmetrization.
    for (std::size_t al = 0; al < 4; ++al) {
      for (std::size_t be = al; be < 4; ++be) {
        const double val = pre * block[al][be];
        const auto pi = static_cast<std::size_t>(reg[al]);
        const auto qi = static_cast<std::size_t>(reg[be]);
        if (al == be) {
          m.at(pi, pi) += val;
        } else if (pi == qi) {
          m.at(pi, pi) += val;
          m.at(pi, pi) += val;
        } else {
          m.at(pi, qi) += val;
          m.at(qi, pi) += val;
        }
      }
    }
  }
  return m;
}

LabelMatrix build_K(const ColoredDiagram& d, const RegionMap& r) {
  const std::size_t n = static_cast<std::size_t>(d.num_colors());
  LabelMatrix m;
  m.num_vars = n;
  m.rows = d.num_crossings();
  m.region_order = canonical_order(r);
  m.entries.assign(m.rows * m.cols(), LaurentPoly(n));
  for (std::size_t v = 0; v < m.rows; ++v) {
    const int s = d.crossing(v).sign;
    const CrossingFrame f = crossing_frame(d, r, v);
    const std::array<std::pair<int, std::array<int, 2>>, 4> labels{{
        {f.a, {s, s}},
        {f.b, {s, -s}},
        {f.c, {-s, -s}},
        {f.d, {-s, s}},
    }};
    for (const auto& [region, e] : labels) {
      m.at(v, static_cast<std::size_t>(region)) += LaurentPoly::monomial(n, exps(n, f.j, e[0], f.k, e[1]));
    }
  }
  return m;
}

ClaspDiagonal clasp_diagonal(const ColoredDiagram& d) {
  const std::size_t n = static_cast<std::size_t>(d.num_colors());
  ClaspDiagonal s;
  for (const Crossing& x : d.crossings()) s.diagonal.push_back(clasp_entry(n, x.sign, x.color_j, x.color_k));
  return s;
}

SymbolicSymMatrix delete_marked(const SymbolicSymMatrix& m, const ColoredDiagram& d, const RegionMap& r) {
  const auto keep = kept_rows(m.region_order, d, r);
  SymbolicSymMatrix out;
  out.num_vars = m.num_vars;
  for (auto i : keep) out.region_order.push_back(m.region_order[i]);
  for (auto p : keep) {
    for (auto q : keep) out.entries.push_back(m.at(p, q));
  }
  return out;
}

RealSymMatrix delete_marked(const RealSymMatrix& m, const ColoredDiagram& d, const RegionMap& r) {
  const auto keep = kept_rows(m.region_order, d, r);
  RealSymMatrix out;
  for (auto i : keep) out.region_order.push_back(m.region_order[i]);
  for (auto p : keep) {
    for (auto q : keep) out.entries.push_back(m.at(p, q));
  }
  return out;
}

LabelMatrix delete_marked(const LabelMatrix& m, const ColoredDiagram& d, const RegionMap& r) {
  const auto keep = kept_rows(m.region_order, d, r);
  LabelMatrix out;
  out.num_vars = m.num_vars;
  out.rows = m.rows;
  for (auto i : keep) out.region_order.push_back(m.region_order[i]);
  for (std::size_t v = 0; v < m.rows; ++v) {
    for (auto q : keep) out.entries.push_back(m.at(v, q));
  }
  return out;
}

SymbolicSymMatrix congruence_product(const LabelMatrix& k, const ClaspDiagonal& s) {
  if (s.diagonal.size() != k.rows) throw std::invalid_argument("clasp diagonal does not match K");
  SymbolicSymMatrix m;
  m.num_vars = k.num_vars;
  m.region_order = k.region_order;
  const std::size_t dim = m.dim();
  m.entries.assign(dim * dim, RationalFn(k.num_vars));
  for (std::size_t v = 0; v < k.rows; ++v) {
    for (std::size_t p = 0; p < dim; ++p) {
      if (k.at(v, p).is_zero()) continue;
      const RationalFn left = s.diagonal[v] * RationalFn(k.at(v, p));
      for (std::size_t q = 0; q < dim; ++q) {
        if (!k.at(v, q).is_zero()) m.at(p, q) += left * RationalFn(k.at(v, q));
      }
    }
  }
  return m;
}

std::vector<std::complex<double>> eval_entries(const SymbolicSymMatrix& m, const TorusPoint& p) {
  std::vector<std::complex<double>> out;
  out.reserve(m.entries.size());
  for (const auto& e : m.entries) out.push_back(eval_complex(e, p));
  return out;
}

nlohmann::json to_json(const SymbolicSymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t p = 0; p < m.dim(); ++p) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t q = 0; q < m.dim(); ++q) row.push_back(to_json(m.at(p, q)));
    rows.push_back(std::move(row));
  }
  return {{"region_order", m.region_order}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const RealSymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t p = 0; p < m.dim(); ++p) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t q = 0; q < m.dim(); ++q) row.push_back(m.at(p, q));
    rows.push_back(std::move(row));
  }
  return {{"region_order", m.region_order}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const LabelMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t v = 0; v < m.rows; ++v) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t q = 0; q < m.cols(); ++q) row.push_back(to_string(m.at(v, q)));
    rows.push_back(std::move(row));
  }
  return {{"region_order", m.region_order}, {"entries", std::move(rows)}};
}

}  // namespace kashaev
