#include <cmath>
#include <numbers>
#include <random>

#include "kashaev/corpus.hpp"
#include "kashaev/error.hpp"
#include "kashaev/invariants.hpp"
#include "kashaev/matrices.hpp"
#include "kashaev/oracle.hpp"
#include "kashaev_cli/cli.hpp"

namespace kashaev::cli {

namespace {

template <class F>
VerifyRow check(std::string suite, std::string name, F&& body) {
  VerifyRow row{std::move(suite), std::move(name), false, ""};
  try {
    row.passed = body(row.detail);
  } catch (const std::exception& e) {
    row.passed = false;
    row.detail = std::string("exception: ") + e.what();
  }
  return row;
}

bool entrywise_equal(const SymbolicSymMatrix& a, const SymbolicSymMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!(a.entries[i] == b.entries[i])) return false;
  }
  return true;
}

TorusPoint random_point(std::mt19937_64& rng, std::size_t mu) {
  std::vector<double> th(mu);
  for (auto& x : th) {
    // avoid the endpoints by a margin
    x = 0.05 + (2 * std::numbers::pi - 0.1) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  return TorusPoint(std::move(th));
}

}  // namespace

std::vector<VerifyRow> run_verify(const VerifyOptions& opts) {
  std::vector<VerifyRow> rows;
  const double pi = std::numbers::pi;

  rows.push_back(check("golden", "torus24_kink signature at (pi, pi)", [&](std::string& detail) {
    const auto s = signature_at(corpus_diagram("torus24_kink"), TorusPoint({pi, pi}), opts.tol_rel);
    detail = "sign=" + std::to_string(s.inertia.signature()) + " sigma=" + std::to_string(s.sigma) +
             " eta=" + std::to_string(s.eta);
    return s.inertia.signature() == -3 && s.sigma == -1 && s.eta == 0;
  }));
  rows.push_back(check("golden", "torus24_kink Conway function", [&](std::string& detail) {
    const auto c = conway(corpus_diagram("torus24_kink"));
    detail = to_string(c.nabla);
    return c.consistency_ok && detail == "t1*t2 + t1^-1*t2^-1";
  }));
  rows.push_back(check("golden", "trefoil_right signature at pi", [&](std::string& detail) {
    const auto s = signature_at(corpus_diagram("trefoil_right"), TorusPoint({pi}), opts.tol_rel);
    detail = "sigma=" + std::to_string(s.sigma);
    return s.sigma == -2 && s.eta == 0;
  }));
  rows.push_back(check("golden", "unknot", [&](std::string& detail) {
    const auto d = corpus_diagram("unknot");
    const auto s = signature_at(d, TorusPoint({pi}), opts.tol_rel);
    const auto c = conway(d);
    detail = "alexander=" + to_string(c.alexander);
    return s.sigma == 0 && s.eta == 0 && c.alexander == LaurentPoly::constant(1, 1);
  }));

  std::mt19937_64 rng(opts.seed);
  std::size_t failures[5] = {0, 0, 0, 0, 0};
  std::string first_failure[5];
  RandomDiagramOptions gen;
  gen.max_crossings = 8;
  for (std::size_t i = 0; i < opts.random_count; ++i) {
    const ColoredDiagram d = random_connected_diagram(rng, gen);
    const std::string tag = "#" + std::to_string(i) + " " + format_pd_text(d.to_pd());
    auto fail = [&](int k, const std::string& why) {
      if (failures[k]++ == 0) first_failure[k] = tag + ": " + why;
    };
    try {
      const RegionMap r = compute_regions(d);
      if (r.num_regions() != d.num_crossings() + 2) fail(0, "region count");
      const SymbolicSymMatrix tau = build_tau_symbolic(d, r);
      if (!entrywise_equal(tau, congruence_product(build_K(d, r), clasp_diagonal(d)))) fail(1, "K^T S K");
      bool fixed = true;
      for (const auto& e : tau.entries) fixed = fixed && phi(e) == e;
      if (!fixed) fail(2, "phi");
      if (!conway(d).consistency_ok) fail(3, "routes");
      for (int k = 0; k < 5; ++k) signature_at(d, r, random_point(rng, static_cast<std::size_t>(d.num_colors())), opts.tol_rel);
    } catch (const ConsistencyError& e) {
      fail(4, e.what());
    } catch (const std::exception& e) {
      fail(3, e.what());
    }
  }
  const char* names[5] = {"region count n + 2", "tau = K^T S K", "phi-invariance of tau",
                          "route A squared equals route B", "parity of nullity and signature"};
  for (int k = 0; k < 5; ++k) {
    rows.push_back(VerifyRow{"property", names[k], failures[k] == 0,
                             failures[k] == 0 ? std::to_string(opts.random_count) + " random diagrams"
                                              : std::to_string(failures[k]) + " failures, first " + first_failure[k]});
  }

  auto oracle_row = [&](const std::string& name, const ColoredDiagram& d) {
    rows.push_back(check("oracle", name, [&](std::string& detail) {
      const FoxAlexander fox = alexander_via_fox(wirtinger(d));
      const ConwayResult c = conway(d);
      detail = to_string(c.alexander);
      if (!fox.conclusive) {
        detail += " (oracle inconclusive: " + fox.note + ")";
        return false;
      }
      return compare_up_to_units(fox.polynomial, c.alexander);
    }));
  };
  for (const auto& name : corpus_names()) {
    const ColoredDiagram d = corpus_diagram(name);
    if (d.num_crossings() == 0 || !is_connected(d)) continue;
    oracle_row(name, d);
  }
  const auto braids = corpus_braids();
  for (std::size_t i = 0; i < braids.size(); ++i) oracle_row("braid " + std::to_string(i + 1), corpus_braid_diagram(braids[i]));
  return rows;
}

}  // namespace kashaev::cli
