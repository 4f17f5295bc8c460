#pragma once

#include <cstddef>
#include <vector>

#include "kashaev/laurent.hpp"
#include "kashaev/matrices.hpp"
#include "kashaev/rational_fn.hpp"

namespace kashaev {

/// Fraction-free (Bareiss) determinant of a square row-major matrix over the
/// Laurent ring. Every division is exact; a failing one raises
/// ConsistencyError. The 0x0 determinant is 1.
LaurentPoly det_bareiss(std::vector<LaurentPoly> entries, std::size_t dim, std::size_t num_vars);

/// Determinant of a square label matrix. Throws ValidationError if not square.
LaurentPoly det_symbolic(const LabelMatrix& m);

/// Determinant over the rational-function field: each row is multiplied by a
/// common multiple of its denominators, the polynomial matrix goes through
/// Bareiss, and the multipliers are divided back out.
RationalFn det_symbolic(const SymbolicSymMatrix& m);

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;
  /// Absolute eigenvalue cutoff: |lambda| <= threshold counts as zero.
  double threshold = 0.0;
  /// Smallest |lambda| above the threshold (infinity if none).
  double min_nonzero = 0.0;

  long signature() const { return static_cast<long>(n_pos) - static_cast<long>(n_neg); }
  /// The smallest nonzero eigenvalue lies within 10x of the threshold.
  bool near_degenerate() const { return min_nonzero < 10.0 * threshold; }
};

inline constexpr double kDefaultTolRel = 1e-9;

/// Eigenvalue sign counts with threshold tol_rel * max(1, max |lambda|).
/// Throws ValidationError on non-finite entries.
Inertia inertia(const RealSymMatrix& m, double tol_rel = kDefaultTolRel);
Inertia inertia(const std::vector<double>& row_major, std::size_t dim, double tol_rel = kDefaultTolRel);

/// Floating-point determinant (partial-pivot LU).
double det_real(const RealSymMatrix& m);

}  // namespace kashaev
