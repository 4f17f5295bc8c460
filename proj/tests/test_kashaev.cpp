#include <algorithm>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kashaev/braid.hpp"
#include "kashaev/corpus.hpp"
#include "kashaev/error.hpp"
#include "kashaev/matrices.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace kashaev;
using oracle::mono;
using oracle::t;

namespace {

bool same_up_to_permutation(const SymbolicSymMatrix& m, const std::vector<RationalFn>& expected) {
  const std::size_t n = m.dim();
  if (expected.size() != n * n) return false;
  std::vector<std::size_t> perm;
  return oracle::find_simultaneous_permutation(
      n, [&](std::size_t p, std::size_t q, std::size_t i, std::size_t j) { return m.at(p, q) == expected[i * n + j]; },
      perm);
}

}  // namespace

TEST(TauLocal, MonochromaticOffDiagonalCornerIsOne) {
  const auto b = tau_local(1, 1, 1);
  EXPECT_EQ(b[1][1], LaurentPoly::constant(1, 1));
  EXPECT_EQ(b[3][3], LaurentPoly::constant(1, 1));
  EXPECT_EQ(b[0][0], (t(1, 0, 2) + t(1, 0, -2)).scaled(Rational(1, 2)));
}

TEST(TauLocal, BichromaticEntries) {
  const auto b = tau_local(2, 1, 2);
  EXPECT_EQ(b[0][0], (mono(2, {2, 2}) + mono(2, {-2, -2})).scaled(Rational(1, 2)));
  // 2 x_j x_k - x_jk expanded term by term
  const auto xj = oracle::NaivePoly::from((t(2, 0) + t(2, 0, -1)).scaled(Rational(1, 2)));
  const auto xk = oracle::NaivePoly::from((t(2, 1) + t(2, 1, -1)).scaled(Rational(1, 2)));
  const auto two_xjxk = (xj * xk).to_laurent().scaled(2);
  EXPECT_EQ(b[1][1], two_xjxk - b[0][0]);
  EXPECT_EQ(b[1][1], (mono(2, {2, -2}) + mono(2, {-2, 2})).scaled(Rational(1, 2)));
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) EXPECT_EQ(b[p][q], b[q][p]);
  }
  EXPECT_EQ(b[0][2], LaurentPoly::constant(2, 1));
  EXPECT_EQ(b[1][3], LaurentPoly::constant(2, 1));
}

TEST(Clasp, Entries) {
  EXPECT_EQ(clasp_entry(2, 1, 1, 2), golden::bichromatic_prefactor());
  const auto d1 = t(1, 0) - t(1, 0, -1);
  EXPECT_EQ(clasp_entry(1, -1, 1, 1), RationalFn(LaurentPoly::constant(1, 4), d1 * d1));
}

TEST(Clasp, InverseDeterminant) {
  const auto d = corpus_diagram("torus24_kink");
  const auto s = clasp_diagonal(d);
  RationalFn det = RationalFn::constant(2, 1);
  for (const auto& e : s.diagonal) det *= e;
  LaurentPoly expected = LaurentPoly::constant(2, 1);
  for (const auto& x : d.crossings()) {
    const auto dj = t(2, static_cast<std::size_t>(x.color_j - 1)) - t(2, static_cast<std::size_t>(x.color_j - 1), -1);
    const auto dk = t(2, static_cast<std::size_t>(x.color_k - 1)) - t(2, static_cast<std::size_t>(x.color_k - 1), -1);
    expected *= (dj * dk).scaled(Rational(-x.sign, 4));
  }
  EXPECT_EQ(RationalFn::constant(2, 1) / det, RationalFn(expected));
}

TEST(TauSymbolic, UnknotIsZero) {
  const auto d = corpus_diagram("unknot");
  const auto m = build_tau_symbolic(d, compute_regions(d));
  ASSERT_EQ(m.dim(), 2u);
  for (const auto& e : m.entries) EXPECT_TRUE(e.is_zero());
  EXPECT_EQ(delete_marked(m, d, compute_regions(d)).dim(), 0u);
}

TEST(TauSymbolic, TwoColorGolden) {
  const auto d = corpus_diagram("torus24_kink");
  const auto r = compute_regions(d);
  EXPECT_TRUE(same_up_to_permutation(build_tau_symbolic(d, r), golden::tau_full()));
  EXPECT_TRUE(same_up_to_permutation(delete_marked(build_tau_symbolic(d, r), d, r), golden::tau_reduced()));
}

TEST(TauSymbolic, RelabelingInvariance) {
  const PdCode pd = parse_pd_text(corpus_text("figure_eight"));
  PdCode shifted = pd;
  for (auto& x : shifted.crossings) {
    for (auto& e : x) e = e % 8 + 1;
  }
  const auto a = ColoredDiagram::from_pd(pd);
  const auto b = ColoredDiagram::from_pd(shifted);
  const auto ma = build_tau_symbolic(a, compute_regions(a));
  const auto mb = build_tau_symbolic(b, compute_regions(b));
  EXPECT_TRUE(same_up_to_permutation(ma, mb.entries));
}

TEST(TauNumeric, GoldenAtMinusOne) {
  const double pi = std::numbers::pi;
  const auto d = corpus_diagram("torus24_kink");
  const auto r = compute_regions(d);
  const auto m = delete_marked(build_tau_numeric(d, r, TorusPoint({pi, pi})), d, r);
  const auto expected = golden::tau_reduced_at_minus_one();
  std::vector<std::size_t> perm;
  EXPECT_TRUE(oracle::find_simultaneous_permutation(
      5, [&](std::size_t p, std::size_t q, std::size_t i, std::size_t j) { return std::abs(m.at(p, q) - expected[i * 5 + j]) < 1e-12; },
      perm));
}

TEST(TauNumeric, ExactlySymmetricAndMatchesSymbolic) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.02, 2 * std::numbers::pi - 0.02);
  for (int i = 0; i < 20; ++i) {
    const auto d = random_connected_diagram(rng);
    const auto r = compute_regions(d);
    const auto sym = build_tau_symbolic(d, r);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> th(static_cast<std::size_t>(d.num_colors()));
      for (auto& x : th) x = angle(rng);
      const auto num = build_tau_numeric(d, r, TorusPoint(th));
      std::vector<double> half = th;
      for (auto& x : half) x /= 2;
      const auto ev = eval_entries(sym, TorusPoint(half));
      for (std::size_t p = 0; p < num.dim(); ++p) {
        for (std::size_t q = 0; q < num.dim(); ++q) {
          ASSERT_EQ(num.at(p, q), num.at(q, p));
          const double scale = 1e-10 * std::max(1.0, std::abs(num.at(p, q)));
          ASSERT_NEAR(ev[p * num.dim() + q].real(), num.at(p, q), scale);
          ASSERT_NEAR(ev[p * num.dim() + q].imag(), 0.0, scale);
        }
      }
    }
  }
}

TEST(LabelMatrix, TwoColorGolden) {
  const auto d = corpus_diagram("torus24_kink");
  const auto k = build_K(d, compute_regions(d));
  ASSERT_EQ(k.rows, 5u);
  ASSERT_EQ(k.cols(), 7u);
  const auto expected = golden::K();
  EXPECT_TRUE(oracle::find_row_column_permutation(
      5, 7, [&](std::size_t v, std::size_t q, std::size_t i, std::size_t j) { return k.at(v, q) == expected[i * 7 + j]; }));
}

TEST(LabelMatrix, SingleCrossingLabels) {
  const auto pos = ColoredDiagram::from_pd(braid_closure(parse_braid("2: 1")));
  const auto k = build_K(pos, compute_regions(pos));
  std::vector<LaurentPoly> row;
  for (std::size_t q = 0; q < k.cols(); ++q) row.push_back(k.at(0, q));
  // t, t^-1 and 1 + 1 on the region touching the crossing twice (the kink).
  LaurentPoly sum(1);
  for (const auto& e : row) sum += e;
  EXPECT_EQ(sum, t(1, 0) + t(1, 0, -1) + LaurentPoly::constant(1, 2));

  const auto neg = ColoredDiagram::from_pd(braid_closure(parse_braid("2: -1")));
  const auto kn = build_K(neg, compute_regions(neg));
  const auto rp = compute_regions(pos);
  const auto rn = compute_regions(neg);
  for (std::size_t v = 0; v < 1; ++v) {
    const auto fp = crossing_frame(pos, rp, v);
    const auto fn = crossing_frame(neg, rn, v);
    EXPECT_EQ(phi(k.at(v, static_cast<std::size_t>(fp.a))), kn.at(v, static_cast<std::size_t>(fn.a)));
  }
}

TEST(LabelMatrix, RowLabelsMultiplyToOne) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_connected_diagram(rng);
    const auto k = build_K(d, compute_regions(d));
    for (std::size_t v = 0; v < k.rows; ++v) {
      // every label is a monomial with coefficient 1; merged corners add up
      LaurentPoly product = LaurentPoly::constant(k.num_vars, 1);
      long labels = 0;
      for (std::size_t q = 0; q < k.cols(); ++q) {
        for (const auto& term : k.at(v, q).terms()) {
          const long mult = term.coeff.get_num().get_si();
          ASSERT_TRUE(term.coeff.get_den() == 1 && mult >= 1);
          labels += mult;
          for (long c = 0; c < mult; ++c) product *= LaurentPoly::monomial(k.num_vars, term.exponents);
        }
      }
      ASSERT_EQ(labels, 4);
      ASSERT_EQ(product, LaurentPoly::constant(k.num_vars, 1));
    }
  }
}

TEST(DeleteMarked, Shapes) {
  const auto d = corpus_diagram("trefoil_right");
  const auto r = compute_regions(d);
  const auto k = delete_marked(build_K(d, r), d, r);
  EXPECT_EQ(k.rows, 3u);
  EXPECT_EQ(k.cols(), 3u);
  const auto fig = corpus_diagram("torus24_kink");
  const auto rf = compute_regions(fig);
  EXPECT_EQ(delete_marked(build_tau_symbolic(fig, rf), fig, rf).dim(), 5u);
}

TEST(DeleteMarked, EdgesSeparateDistinctRegions) {
  // A 4-valent plane graph has no bridges, so no edge of a valid diagram has
  // one region on both sides.
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_connected_diagram(rng);
    const auto r = compute_regions(d);
    for (std::size_t e = 0; e < d.num_edges(); ++e) {
      auto [p, q] = regions_beside_edge(d, r, static_cast<int>(e));
      ASSERT_NE(p, q);
    }
  }
}

TEST(DeleteMarked, SameRegionOnBothSidesIsRejected) {
  const auto d = corpus_diagram("trefoil_right");
  RegionMap r = compute_regions(d);
  for (auto& c : r.corner_region) c = {0, 0, 0, 0};
  EXPECT_THROW(delete_marked(build_K(d, compute_regions(d)), d, r), ValidationError);
}

TEST(Factorization, TauEqualsKtSK) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const auto d = random_connected_diagram(rng);
    const auto r = compute_regions(d);
    const auto tau = build_tau_symbolic(d, r);
    const auto prod = congruence_product(build_K(d, r), clasp_diagonal(d));
    ASSERT_EQ(tau.dim(), prod.dim());
    for (std::size_t e = 0; e < tau.entries.size(); ++e) {
      ASSERT_EQ(tau.entries[e], prod.entries[e]) << format_pd_text(d.to_pd());
      ASSERT_EQ(phi(tau.entries[e]), tau.entries[e]);
    }
  }
}

TEST(Json, MatrixDump) {
  const auto d = corpus_diagram("trefoil_right");
  const auto r = compute_regions(d);
  const auto j = to_json(build_K(d, r));
  EXPECT_EQ(j["region_order"].size(), 5u);
  EXPECT_EQ(j["entries"].size(), 3u);
  const auto js = to_json(build_tau_symbolic(d, r));
  EXPECT_TRUE(js["entries"][0][0].contains("numerator"));
}
