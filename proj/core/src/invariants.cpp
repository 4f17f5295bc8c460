#include "kashaev/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <thread>

#include "kashaev/error.hpp"
#include "kashaev/matrices.hpp"

namespace kashaev {

SignatureResult signature_at(const ColoredDiagram& d, const RegionMap& r, const TorusPoint& p, double tol_rel) {
  const RealSymMatrix m = delete_marked(build_tau_numeric(d, r, p), d, r);
  SignatureResult out;
  out.point = p;
  out.inertia = inertia(m, tol_rel);
  out.near_degenerate = out.inertia.near_degenerate();
  const long s = out.inertia.signature() - monochromatic_writhe(d);
  const long z = static_cast<long>(out.inertia.n_zero) + static_cast<long>(d.num_diagram_pieces()) - 1;
  if (s % 2 != 0 || z % 2 != 0) {
    throw ConsistencyError(std::string("parity violation at the evaluation point (sign - w_m = ") +
                           std::to_string(s) + ", nullity term = " + std::to_string(z) +
                           (out.near_degenerate ? ", near degenerate)" : ")"));
  }
  out.sigma = static_cast<int>(s / 2);
  out.eta = static_cast<int>(z / 2);
  return out;
}

SignatureResult signature_at(const ColoredDiagram& d, const TorusPoint& p, double tol_rel) {
  return signature_at(d, compute_regions(d), p, tol_rel);
}

std::vector<double> grid_angles(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1));
  }
  return out;
}

namespace {

std::vector<double> grid_point(const std::vector<double>& angles, std::size_t mu, std::size_t index) {
  const std::size_t n = angles.size();
  std::vector<double> th(mu);
  for (std::size_t c = mu; c-- > 0;) {
    th[c] = angles[index % n];
    index /= n;
  }
  return th;
}

}  // namespace

std::vector<SignatureResult> signature_grid(const ColoredDiagram& d, std::size_t n, double tol_rel,
                                            unsigned workers) {
  if (n < 1) throw ValidationError("grid resolution must be positive");
  const std::size_t mu = static_cast<std::size_t>(d.num_colors());
  const RegionMap r = compute_regions(d);
  const std::vector<double> angles = grid_angles(n);
  std::size_t total = 1;
  for (std::size_t c = 0; c < mu; ++c) total *= n;

  std::vector<SignatureResult> out(total);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = signature_at(d, r, TorusPoint(grid_point(angles, mu, i)), tol_rel);
    }
  };
  if (workers <= 1) {
    run(0, total);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t b = 0; b < total; b += chunk) {
    jobs.push_back(std::async(std::launch::async, run, b, std::min(total, b + chunk)));
  }
  for (auto& j : jobs) j.get();
  return out;
}

std::string grid_csv(const std::vector<SignatureResult>& grid, std::size_t num_colors) {
  std::string out;
  for (std::size_t c = 1; c <= num_colors; ++c) out += "theta" + std::to_string(c) + ",";
  out += "sigma,eta,near_degenerate\n";
  char buf[32];
  for (const auto& s : grid) {
    for (double th : s.point.thetas()) {
      std::snprintf(buf, sizeof buf, "%.17g,", th);
      out += buf;
    }
    out += std::to_string(s.sigma) + "," + std::to_string(s.eta) + "," + (s.near_degenerate ? "1" : "0") + "\n";
  }
  return out;
}

LaurentPoly positive_lead(const LaurentPoly& a) {
  if (!a.is_zero() && a.leading_coeff() < 0) return -a;
  return a;
}

LaurentPoly symmetrize(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  const Exponents lo = a.min_exponents();
  const Exponents hi = a.max_exponents();
  Exponents shift(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const std::int32_t sum = lo[i] + hi[i];
    // floor(sum / 2) for either sign
    shift[i] = -(sum >= 0 ? sum / 2 : -((-sum + 1) / 2));
  }
  return positive_lead(a.shifted(shift));
}

LaurentPoly alexander_from_nabla(const LaurentPoly& nabla) {
  if (nabla.is_zero()) return nabla;
  Exponents lo = nabla.min_exponents();
  for (auto& e : lo) e = -e;
  std::vector<Term> terms = nabla.shifted(lo).terms();
  for (auto& t : terms) {
    for (auto& e : t.exponents) {
      if (e % 4 != 0) {
        throw ConsistencyError("nabla has exponents incompatible with the t^2 -> t substitution: " +
                               to_string(nabla));
      }
      e /= 2;
    }
  }
  return symmetrize(LaurentPoly::from_terms(nabla.num_vars(), std::move(terms)));
}

ConwayResult conway(const ColoredDiagram& d) {
  if (!is_connected(d)) {
    throw ValidationError("the Conway function needs a connected diagram (" +
                          std::to_string(d.num_diagram_pieces()) + " pieces)");
  }
  const std::size_t n = static_cast<std::size_t>(d.num_colors());
  const RegionMap r = compute_regions(d);
  ConwayResult out;
  out.num_vars = n;

  auto diff = [n](int c) {
    return LaurentPoly::variable(n, static_cast<std::size_t>(c - 1)) -
           LaurentPoly::variable(n, static_cast<std::size_t>(c - 1), -2);
  };
  const LaurentPoly t1_diff = diff(1);

  out.det_K_tilde = det_symbolic(delete_marked(build_K(d, r), d, r));
  out.nabla = RationalFn(out.det_K_tilde, t1_diff);
  if (!out.nabla.is_zero() && out.nabla.numerator().leading_coeff() < 0) out.nabla = -out.nabla;

  out.det_tau_tilde = det_symbolic(delete_marked(build_tau_symbolic(d, r), d, r));
  LaurentPoly prod = LaurentPoly::constant(n, 1);
  for (const Crossing& x : d.crossings()) {
    prod *= (diff(x.color_j) * diff(x.color_k)).scaled(Rational(-x.sign, 4));
  }
  out.nabla_sq = RationalFn(prod) * out.det_tau_tilde / RationalFn(t1_diff * t1_diff);
  out.consistency_ok = out.nabla * out.nabla == out.nabla_sq;

  if (n == 1) {
    out.alexander = alexander_from_nabla(out.det_K_tilde);
  } else {
    if (!out.nabla.is_polynomial()) {
      throw ConsistencyError("det(K~) is not divisible by (t1 - t1^-1) for a multi-colored link");
    }
    out.alexander = alexander_from_nabla(out.nabla.numerator());
  }
  return out;
}

ColorMergeCheck check_color_merge(const ColoredDiagram& d, int c1, int c2, const TorusPoint& p, double tol_rel) {
  const ColoredDiagram merged = merge_colors(d, c1, c2);
  if (p.dim() != static_cast<std::size_t>(merged.num_colors())) {
    throw ValidationError("merge check point needs " + std::to_string(merged.num_colors()) + " angles");
  }
  const int keep = std::min(c1, c2);
  const int drop = std::max(c1, c2);
  std::vector<double> lifted(static_cast<std::size_t>(d.num_colors()));
  for (int c = 1; c <= d.num_colors(); ++c) {
    const int m = c == drop ? keep : (c > drop ? c - 1 : c);
    lifted[static_cast<std::size_t>(c - 1)] = p[static_cast<std::size_t>(m - 1)];
  }
  ColorMergeCheck out;
  const SignatureResult lhs = signature_at(merged, p, tol_rel);
  const SignatureResult rhs = signature_at(d, TorusPoint(lifted), tol_rel);
  out.sigma_merged = lhs.sigma;
  out.sigma_original = rhs.sigma;
  out.linking_sum = color_linking_sum(d, c1, c2);
  if (lhs.near_degenerate || rhs.near_degenerate) {
    out.skipped = true;
    out.note = "near-degenerate evaluation point";
    return out;
  }
  out.passed = out.sigma_merged == out.sigma_original - out.linking_sum;
  return out;
}

ConstancyReport check_local_constancy(const ColoredDiagram& d, const std::vector<SignatureResult>& grid,
                                      std::size_t n, int depth, double tol_rel) {
  (void)tol_rel;
  const std::size_t mu = static_cast<std::size_t>(d.num_colors());
  const RegionMap r = compute_regions(d);
  ConstancyReport rep;
  std::size_t stride = 1;
  const std::size_t samples = (std::size_t{1} << depth) + 1;
  for (std::size_t axis = mu; axis-- > 0;) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if ((i / stride) % n == n - 1) continue;
      const SignatureResult& a = grid[i];
      const SignatureResult& b = grid[i + stride];
      if (a.eta != 0 || b.eta != 0 || a.near_degenerate || b.near_degenerate) {
        ++rep.pairs_skipped;
        continue;
      }
      double lo = INFINITY, hi = 0.0;
      int first_sign = 0;
      bool sign_change = false;
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> th = a.point.thetas();
        const double f = static_cast<double>(s) / static_cast<double>(samples - 1);
        th[axis] = a.point[axis] + f * (b.point[axis] - a.point[axis]);
        const double det = det_real(delete_marked(build_tau_numeric(d, r, TorusPoint(th)), d, r));
        const int sg = det > 0 ? 1 : (det < 0 ? -1 : 0);
        if (s == 0) first_sign = sg;
        if (sg != first_sign) sign_change = true;
        lo = std::min(lo, std::abs(det));
        hi = std::max(hi, std::abs(det));
      }
      if (sign_change || lo <= 1e-9 * std::max(1.0, hi)) {
        ++rep.pairs_skipped;
        continue;
      }
      ++rep.pairs_checked;
      if (a.sigma != b.sigma) ++rep.violations;
    }
    stride *= n;
  }
  return rep;
}

nlohmann::json to_json(const SignatureResult& s) {
  return {{"theta", s.point.thetas()},
          {"sigma", s.sigma},
          {"eta", s.eta},
          {"inertia",
           {{"n_pos", s.inertia.n_pos},
            {"n_neg", s.inertia.n_neg},
            {"n_zero", s.inertia.n_zero},
            {"threshold", s.inertia.threshold}}},
          {"near_degenerate", s.near_degenerate}};
}

nlohmann::json to_json(const ConwayResult& c) {
  return {{"num_colors", c.num_vars},
          {"nabla_up_to_sign", to_string(c.nabla)},
          {"alexander", to_string(c.alexander)},
          {"nabla_squared", to_string(c.nabla_sq)},
          {"det_K_tilde", to_string(c.det_K_tilde)},
          {"consistency_ok", c.consistency_ok}};
}

}  // namespace kashaev
