#pragma once

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library beyond the LaurentPoly value type.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "kashaev/laurent.hpp"
#include "kashaev/rational_fn.hpp"

namespace oracle {

using kashaev::Exponents;
using kashaev::LaurentPoly;
using kashaev::Rational;
using kashaev::RationalFn;

/// Term map keyed by half-step exponents.
struct NaivePoly {
  std::size_t n = 0;
  std::map<Exponents, Rational> terms;

  static NaivePoly from(const LaurentPoly& p) {
    NaivePoly out{p.num_vars(), {}};
    for (const auto& t : p.terms()) out.terms[t.exponents] = t.coeff;
    return out;
  }

  LaurentPoly to_laurent() const {
    std::vector<kashaev::Term> ts;
    for (const auto& [e, c] : terms) {
      if (c != 0) ts.push_back({e, c});
    }
    return LaurentPoly::from_terms(n, ts);
  }

  NaivePoly operator+(const NaivePoly& o) const {
    NaivePoly out = *this;
    for (const auto& [e, c] : o.terms) out.terms[e] += c;
    return out;
  }

  NaivePoly operator*(const NaivePoly& o) const {
    NaivePoly out{n, {}};
    for (const auto& [ea, ca] : terms) {
      for (const auto& [eb, cb] : o.terms) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        out.terms[e] += ca * cb;
      }
    }
    return out;
  }
};

/// Monomial in half-steps, e.g. mono(2, {2, -2}) is t1 t2^-1.
inline LaurentPoly mono(std::size_t n, Exponents e, Rational c = 1) {
  return LaurentPoly::monomial(n, std::move(e), c);
}

inline LaurentPoly constant(std::size_t n, Rational c) { return LaurentPoly::constant(n, c); }

/// t_i in whole powers.
inline LaurentPoly t(std::size_t n, std::size_t i, int power = 1) {
  Exponents e(n, 0);
  e[i] = 2 * power;
  return LaurentPoly::monomial(n, e);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, int max_terms = 4, int max_exp = 3) {
  std::vector<kashaev::Term> ts;
  const int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int k = 0; k < count; ++k) {
    Exponents e(n);
    for (auto& x : e) x = static_cast<std::int32_t>(rng() % static_cast<unsigned>(2 * max_exp + 1)) - max_exp;
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 3) + 1;
    Rational c(num, den);
    c.canonicalize();
    ts.push_back({e, c});
  }
  return LaurentPoly::from_terms(n, ts);
}

/// Crossing sign from edge numbering alone, for PD codes whose edges are
/// numbered consecutively along each component: X[i,j,k,l] is positive iff
/// the over strand runs from l to j.
inline int numbering_sign(const std::array<int, 4>& x) {
  const int j = x[1], l = x[3];
  return (j == l + 1 || l > j + 1) ? 1 : -1;
}

/// Finds a bijection p with a(p[i], p[j]) == b(i, j) for all i, j.
inline bool find_simultaneous_permutation(std::size_t n, const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& match,
                                          std::vector<std::size_t>& perm) {
  perm.assign(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      perm[i] = c;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) ok = match(perm[i], perm[k], i, k) && match(perm[k], perm[i], k, i);
      if (ok) {
        used[c] = true;
        if (go(i + 1)) return true;
        used[c] = false;
      }
    }
    return false;
  };
  return go(0);
}

/// Finds row and column bijections with a(r[i], c[j]) == b(i, j).
inline bool find_row_column_permutation(std::size_t rows, std::size_t cols,
                                        const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& match) {
  std::vector<std::size_t> cp(cols);
  std::vector<bool> rused(rows, false), cused(cols, false);
  std::function<bool(std::size_t)> rows_go = [&](std::size_t i) -> bool {
    if (i == rows) return true;
    for (std::size_t r = 0; r < rows; ++r) {
      if (rused[r]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < cols && ok; ++j) ok = match(r, cp[j], i, j);
      if (ok) {
        rused[r] = true;
        if (rows_go(i + 1)) return true;
        rused[r] = false;
      }
    }
    return false;
  };
  std::function<bool(std::size_t)> cols_go = [&](std::size_t j) -> bool {
    if (j == cols) return rows_go(0);
    for (std::size_t c = 0; c < cols; ++c) {
      if (cused[c]) continue;
      cp[j] = c;
      cused[c] = true;
      if (cols_go(j + 1)) return true;
      cused[c] = false;
    }
    return false;
  };
  return cols_go(0);
}

/// Signature of the 2x2 symmetric matrix [[a, b], [b, d]].
inline int signature2(double a, double b, double d) {
  const double tr = a + d;
  const double det = a * d - b * b;
  if (det > 0) return tr > 0 ? 2 : -2;
  if (det < 0) return 0;
  return tr > 0 ? 1 : (tr < 0 ? -1 : 0);
}

}  // namespace oracle
