#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "kashaev/diagram.hpp"
#include "kashaev/laurent.hpp"
#include "kashaev/rational_fn.hpp"
#include "kashaev/regions.hpp"

namespace kashaev {

/// Region-indexed symmetric matrix over the rational-function field.
struct SymbolicSymMatrix {
  /// Region id of each row (and column).
  std::vector<int> region_order;
  /// Dense row-major storage, entries(p, q) == entries(q, p).
  std::vector<RationalFn> entries;
  std::size_t num_vars = 0;

  std::size_t dim() const { return region_order.size(); }
  const RationalFn& at(std::size_t p, std::size_t q) const { return entries[p * dim() + q]; }
  RationalFn& at(std::size_t p, std::size_t q) { return entries[p * dim() + q]; }
};

/// Region-indexed real symmetric matrix, symmetric to the bit.
struct RealSymMatrix {
  std::vector<int> region_order;
  std::vector<double> entries;

  std::size_t dim() const { return region_order.size(); }
  double at(std::size_t p, std::size_t q) const { return entries[p * dim() + q]; }
  double& at(std::size_t p, std::size_t q) { return entries[p * dim() + q]; }
};

/// Crossing-by-region matrix of corner labels.
struct LabelMatrix {
  std::size_t rows = 0;
  std::vector<int> region_order;
  std::vector<LaurentPoly> entries;
  std::size_t num_vars = 0;

  std::size_t cols() const { return region_order.size(); }
  const LaurentPoly& at(std::size_t v, std::size_t q) const { return entries[v * cols() + q]; }
  LaurentPoly& at(std::size_t v, std::size_t q) { return entries[v * cols() + q]; }
};

/// S_vv = -4 sgn(v) / ((t_j - t_j^-1)(t_k - t_k^-1)).
struct ClaspDiagonal {
  std::vector<RationalFn> diagonal;
};

/// Local 4x4 block over (a, b, c, d) in the variables t: x_j = (t_j + t_j^-1)/2
/// and x_jk = (t_j t_k + t_j^-1 t_k^-1)/2. Colors are 1-based; j == k gives
/// the monochromatic block.
std::array<std::array<LaurentPoly, 4>, 4> tau_local(std::size_t num_vars, int j, int k);

/// Numeric block at angles (theta_j, theta_k).
std::array<std::array<double, 4>, 4> tau_local_numeric(double theta_j, double theta_k);

/// -4 sgn / ((t_j - t_j^-1)(t_k - t_k^-1)).
RationalFn clasp_entry(std::size_t num_vars, int sign, int j, int k);

/// tau_D(t^2), rows in canonical region order.
SymbolicSymMatrix build_tau_symbolic(const ColoredDiagram& d, const RegionMap& r);
/// tau_D(omega) with x_j = cos(theta_j / 2), x_jk = cos((theta_j + theta_k) / 2).
RealSymMatrix build_tau_numeric(const ColoredDiagram& d, const RegionMap& r, const TorusPoint& p);
LabelMatrix build_K(const ColoredDiagram& d, const RegionMap& r);
ClaspDiagonal clasp_diagonal(const ColoredDiagram& d);

/// Removes the two regions beside the marked edge: rows and columns of tau,
/// columns of K. Throws ValidationError when both sides are one region.
SymbolicSymMatrix delete_marked(const SymbolicSymMatrix& m, const ColoredDiagram& d, const RegionMap& r);
RealSymMatrix delete_marked(const RealSymMatrix& m, const ColoredDiagram& d, const RegionMap& r);
LabelMatrix delete_marked(const LabelMatrix& m, const ColoredDiagram& d, const RegionMap& r);

/// K^T S K as a region-indexed symmetric matrix.
SymbolicSymMatrix congruence_product(const LabelMatrix& k, const ClaspDiagonal& s);

/// Entrywise evaluation at t_j^(1/2) = exp(i theta_j / 2).
std::vector<std::complex<double>> eval_entries(const SymbolicSymMatrix& m, const TorusPoint& p);

nlohmann::json to_json(const SymbolicSymMatrix& m);
nlohmann::json to_json(const RealSymMatrix& m);
nlohmann::json to_json(const LabelMatrix& m);

}  // namespace kashaev
