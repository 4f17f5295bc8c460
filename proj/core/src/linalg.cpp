#include "kashaev/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "kashaev/error.hpp"

namespace kashaev {

LaurentPoly det_bareiss(std::vector<LaurentPoly> a, std::size_t n, std::size_t num_vars) {
  if (a.size() != n * n) throw std::invalid_argument("det_bareiss: entry count is not dim^2");
  if (n == 0) return LaurentPoly::constant(num_vars, 1);
  auto at = [&a, n](std::size_t i, std::size_t j) -> LaurentPoly& { return a[i * n + j]; };
  LaurentPoly prev = LaurentPoly::constant(num_vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k).is_zero()) ++swap;
      if (swap == n) return LaurentPoly(num_vars);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        LaurentPoly q;
        if (!try_exact_div(num, prev, q)) throw ConsistencyError("Bareiss step left a remainder");
        at(i, j) = std::move(q);
      }
      at(i, k) = LaurentPoly(num_vars);
    }
    prev = at(k, k);
  }
  LaurentPoly det = at(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly det_symbolic(const LabelMatrix& m) {
  if (m.rows != m.cols()) {
    throw ValidationError("determinant of a non-square " + std::to_string(m.rows) + "x" +
                          std::to_string(m.cols()) + " matrix");
  }
  return det_bareiss(m.entries, m.rows, m.num_vars);
}

RationalFn det_symbolic(const SymbolicSymMatrix& m) {
  const std::size_t n = m.dim();
  const std::size_t nv = m.num_vars;
  std::vector<LaurentPoly> cleared;
  cleared.reserve(n * n);
  LaurentPoly multiplier = LaurentPoly::constant(nv, 1);
  for (std::size_t p = 0; p < n; ++p) {
    LaurentPoly l = LaurentPoly::constant(nv, 1);
    for (std::size_t q = 0; q < n; ++q) {
      const LaurentPoly& den = m.at(p, q).denominator();
      if (den.is_constant()) continue;
      LaurentPoly tmp;
      if (try_exact_div(l, den, tmp)) continue;
      if (try_exact_div(den, l, tmp)) {
        l = den;
      } else {
        l *= den;
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      const RationalFn& e = m.at(p, q);
      cleared.push_back(e.numerator() * exact_div(l, e.denominator()));
    }
    multiplier *= l;
  }
  return RationalFn(det_bareiss(std::move(cleared), n, nv), multiplier);
}

Inertia inertia(const std::vector<double>& a, std::size_t n, double tol_rel) {
  if (a.size() != n * n) throw std::invalid_argument("inertia: entry count is not dim^2");
  Inertia out;
  out.min_nonzero = std::numeric_limits<double>::infinity();
  out.threshold = tol_rel;
  if (n == 0) return out;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = a[i * n + j];
      if (!std::isfinite(x)) throw ValidationError("inertia: non-finite matrix entry");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("inertia: eigenvalue iteration failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  out.threshold = tol_rel * scale;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double x = ev(i);
    if (std::abs(x) <= out.threshold) {
      ++out.n_zero;
    } else {
      out.min_nonzero = std::min(out.min_nonzero, std::abs(x));
      if (x > 0) {
        ++out.n_pos;
      } else {
        ++out.n_neg;
      }
    }
  }
  return out;
}

Inertia inertia(const RealSymMatrix& m, double tol_rel) { return inertia(m.entries, m.dim(), tol_rel); }

double det_real(const RealSymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  if (n == 0) return 1.0;
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(m.entries.data(), n, n);
  return a.partialPivLu().determinant();
}

}  // namespace kashaev
