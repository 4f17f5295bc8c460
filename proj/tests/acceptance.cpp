// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "kashaev/braid.hpp"
#include "kashaev/corpus.hpp"
#include "kashaev/error.hpp"
#include "kashaev/invariants.hpp"
#include "kashaev/linalg.hpp"
#include "kashaev/matrices.hpp"
#include "kashaev/oracle.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace kashaev;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.why << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    if (c.ok) c.why << "took " << secs << " s, limit " << limit_s << " s";
    c.ok = false;
  }
  failures += !c.ok;
  std::printf("%s [%d] %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.ok ? "" : ": ",
              c.why.str().c_str());
  std::fflush(stdout);
}

LaurentPoly one_var(int half_steps, int coeff = 1) { return oracle::mono(1, {half_steps}, coeff); }

void golden_matrices(Check& c) {
  const auto d = corpus_diagram("torus24_kink");
  const auto r = compute_regions(d);
  const auto tau = build_tau_symbolic(d, r);
  const auto expected = golden::tau_full();
  c.require(tau.dim() == 7, "tau is not 7x7");
  std::vector<std::size_t> perm;
  c.require(oracle::find_simultaneous_permutation(
                7, [&](std::size_t p, std::size_t q, std::size_t i, std::size_t j) { return tau.at(p, q) == expected[i * 7 + j]; },
                perm),
            "no simultaneous permutation matches tau");
  const auto k = build_K(d, r);
  const auto ek = golden::K();
  c.require(k.rows == 5 && k.cols() == 7, "K is not 5x7");
  c.require(oracle::find_row_column_permutation(
                5, 7, [&](std::size_t v, std::size_t q, std::size_t i, std::size_t j) { return k.at(v, q) == ek[i * 7 + j]; }),
            "no row/column permutation matches K");
}

void golden_det(Check& c) {
  const auto d = corpus_diagram("torus24_kink");
  const auto r = compute_regions(d);
  const auto det = det_symbolic(delete_marked(build_tau_symbolic(d, r), d, r));
  // -(-4 / (d1 d2))^5 d1 d2 (t1 t2 + t1^-1 t2^-1)^2
  const LaurentPoly d12 = golden::t1_diff() * golden::t2_diff();
  const RationalFn pre(LaurentPoly::constant(2, -4), d12);
  const RationalFn expected = -(pre.pow(5) * RationalFn(d12) * RationalFn(golden::nabla() * golden::nabla()));
  c.require(det == expected, "det = " + to_string(det));
}

void golden_signature(Check& c) {
  const auto d = corpus_diagram("torus24_kink");
  const auto at_minus_one = signature_at(d, TorusPoint({kPi, kPi}));
  c.require(at_minus_one.inertia.signature() == -3, "sign(tau~(-1,-1)) != -3");
  c.require(at_minus_one.sigma == -1, "sigma(-1,-1) != -1");
  std::size_t generic = 0;
  for (const auto& s : signature_grid(d, 16)) {
    const std::complex<double> w1 = std::polar(1.0, s.point[0]), w2 = std::polar(1.0, s.point[1]);
    if (std::abs(w1 * w2 + 1.0) < 1e-9) continue;
    ++generic;
    const double re = ((1.0 - w1) * (1.0 - w2)).real();
    const int expected = re > 0 ? -1 : (re < 0 ? 1 : 0);
    c.require(s.sigma == expected, "sigma mismatch at a grid point");
    c.require(s.eta == 0, "eta != 0 at a generic grid point");
  }
  c.require(generic == 256, "grid unexpectedly meets w1 w2 = -1");
  std::size_t on_locus = 0;
  for (int k = 1; k <= 16; ++k) {
    const double th1 = 2 * kPi * k / 17;
    const double th2 = th1 < kPi ? kPi - th1 : 3 * kPi - th1;
    const auto s = signature_at(d, TorusPoint({th1, th2}));
    c.require(s.eta == 1, "eta != 1 on w1 w2 = -1");
    ++on_locus;
  }
  c.require(on_locus >= 8, "too few locus samples");
}

void golden_conway(Check& c) {
  const auto res = conway(corpus_diagram("torus24_kink"));
  const LaurentPoly g = golden::nabla();
  c.require(res.nabla == RationalFn(g) || res.nabla == RationalFn(-g), "det route: nabla = " + to_string(res.nabla));
  c.require(res.nabla_sq == RationalFn(g * g), "tau route: nabla^2 = " + to_string(res.nabla_sq));
  c.require(res.consistency_ok, "route consistency flag is false");
}

void classical(Check& c) {
  // Right trefoil.
  const auto tr = corpus_diagram("trefoil_right");
  const LaurentPoly delta = one_var(2) - one_var(0) + one_var(-2);
  const auto fox = alexander_via_fox(wirtinger(tr));
  c.require(fox.conclusive && fox.polynomial == delta, "Fox trefoil = " + to_string(fox.polynomial));
  c.require(compare_up_to_units(conway(tr).alexander, fox.polynomial), "trefoil Conway route disagrees with Fox");
  // Seifert matrix A = [[-1, 1], [0, -1]] at w = -1: 2 (A + A^T).
  const int seifert = oracle::signature2(-4, 2, -4);
  c.require(seifert == -2, "Seifert oracle");
  c.require(signature_at(tr, TorusPoint({kPi})).sigma == seifert, "trefoil sigma(-1)");
  // Unknot.
  const auto u = corpus_diagram("unknot");
  for (double th : {0.5, kPi, 5.0}) {
    const auto s = signature_at(u, TorusPoint({th}));
    c.require(s.sigma == 0 && s.eta == 0, "unknot sigma/eta");
  }
  c.require(compare_up_to_units(conway(u).alexander, LaurentPoly::constant(1, 1)), "unknot Delta");
  // Positive Hopf link, 2 colors, 3x3 grid.
  const auto h = corpus_diagram("hopf_positive");
  for (const auto& s : signature_grid(h, 3)) c.require(s.sigma == 0 && s.eta == 0, "Hopf sigma/eta");
  const auto hfox = alexander_via_fox(wirtinger(h));
  c.require(hfox.conclusive && compare_up_to_units(hfox.polynomial, LaurentPoly::constant(2, 1)), "Hopf Fox");
  c.require(compare_up_to_units(conway(h).alexander, LaurentPoly::constant(2, 1)), "Hopf Conway route");
}

void property_suite(Check& c) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(1e-3, 2 * kPi - 1e-3);
  for (int i = 0; i < 60 && c.ok; ++i) {
    const auto d = random_connected_diagram(rng);
    const std::string pd = " on " + format_pd_text(d.to_pd());
    const auto r = compute_regions(d);
    c.require(r.num_regions() == d.num_crossings() + 2, "region count" + pd);
    const auto tau = build_tau_symbolic(d, r);
    const auto prod = congruence_product(build_K(d, r), clasp_diagonal(d));
    c.require(prod.dim() == tau.dim(), "factorization shape" + pd);
    for (std::size_t p = 0; p < tau.dim() && c.ok; ++p) {
      for (std::size_t q = 0; q < tau.dim(); ++q) {
        c.require(prod.at(p, q) == tau.at(p, q), "factorization" + pd);
        c.require(phi(tau.at(p, q)) == tau.at(p, q), "phi-invariance" + pd);
      }
    }
    c.require(conway(d).consistency_ok, "route equivalence" + pd);
    const int wm = monochromatic_writhe(d);
    for (int k = 0; k < 5; ++k) {
      std::vector<double> th;
      for (int col = 0; col < d.num_colors(); ++col) th.push_back(angle(rng));
      const auto m = delete_marked(build_tau_numeric(d, r, TorusPoint(th)), d, r);
      const auto in = inertia(m);
      c.require((in.n_zero + d.num_diagram_pieces() - 1) % 2 == 0, "nullity parity" + pd);
      c.require((in.signature() - wm) % 2 == 0, "signature parity" + pd);
    }
  }
}

void color_merge(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(1e-2, 2 * kPi - 1e-2);
  std::vector<ColoredDiagram> diagrams{corpus_diagram("torus24_kink")};
  RandomDiagramOptions opts;
  opts.max_colors = 2;
  while (diagrams.size() < 6) {
    const auto base = ColoredDiagram::from_pd(braid_closure(random_connected_braid(rng, opts)));
    if (base.num_components() >= 2) diagrams.push_back(random_coloring(rng, base, 2));
  }
  std::size_t checked = 0, skipped = 0;
  for (const auto& d : diagrams) {
    for (int k = 0; k < 5; ++k) {
      const auto res = check_color_merge(d, 1, 2, TorusPoint({angle(rng)}));
      if (res.skipped) {
        ++skipped;
        std::printf("  skipped degenerate point: %s\n", res.note.c_str());
        continue;
      }
      ++checked;
      c.require(res.passed, "merge identity" + (" on " + format_pd_text(d.to_pd())));
    }
  }
  c.require(checked > 0, "every point was skipped");
  if (skipped > 0) std::printf("  %zu of %zu points skipped\n", skipped, checked + skipped);
}

void oracle_equivalence(Check& c) {
  std::vector<std::pair<std::string, ColoredDiagram>> corpus;
  for (const char* name : {"trefoil_right", "figure_eight", "hopf_positive", "whitehead", "torus24_kink"}) {
    corpus.emplace_back(name, corpus_diagram(name));
  }
  const auto braids = corpus_braids();
  c.require(braids.size() == 10, "braid corpus size");
  for (const auto& b : braids) {
    const auto d = corpus_braid_diagram(b);
    c.require(d.num_crossings() <= 8, "braid closure exceeds 8 crossings");
    corpus.emplace_back("braid", d);
  }
  for (const auto& [name, d] : corpus) {
    const auto fox = alexander_via_fox(wirtinger(d));
    c.require(fox.conclusive, name + ": Fox inconclusive");
    c.require(compare_up_to_units(fox.polynomial, conway(d).alexander), name + ": Fox and Conway routes differ");
  }
}

}  // namespace

int main() {
  criterion(1, "golden tau and K matrices for the 2-colored corpus diagram", 1.0, golden_matrices);
  criterion(2, "golden determinant of reduced tau", 1.0, golden_det);
  criterion(3, "signature and nullity on the 16x16 grid and on w1 w2 = -1", 5.0, golden_signature);
  criterion(4, "Conway function by both routes", 0.0, golden_conway);
  criterion(5, "trefoil, unknot and Hopf link against Fox and Seifert oracles", 0.0, classical);
  criterion(6, "property suite on 60 random diagrams", 60.0, property_suite);
  criterion(7, "color-merge identity", 0.0, color_merge);
  criterion(8, "Fox calculus agrees with the Conway route on the corpus", 0.0, oracle_equivalence);
  return failures == 0 ? 0 : 1;
}
