#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kashaev/diagram.hpp"
#include "kashaev/laurent.hpp"
#include "kashaev/linalg.hpp"
#include "kashaev/rational_fn.hpp"
#include "kashaev/regions.hpp"

namespace kashaev {

struct SignatureResult {
  TorusPoint point;
  int sigma = 0;
  int eta = 0;
  Inertia inertia;
  bool near_degenerate = false;
};

/// sigma = (sign - w_m) / 2 and eta from the nullity of the reduced tau at p.
/// Split diagrams are accepted: each extra piece contributes one to eta
/// beyond the nullity of the reduced matrix. Throws ConsistencyError when a
/// parity check fails.
SignatureResult signature_at(const ColoredDiagram& d, const TorusPoint& p, double tol_rel = kDefaultTolRel);
SignatureResult signature_at(const ColoredDiagram& d, const RegionMap& r, const TorusPoint& p,
                             double tol_rel = kDefaultTolRel);

/// Open grid angles 2 pi k / (n + 1), k = 1..n.
std::vector<double> grid_angles(std::size_t n);

/// signature_at over the n^mu open grid, theta1 varying slowest. Points are
/// spread over worker threads; the result order does not depend on them.
std::vector<SignatureResult> signature_grid(const ColoredDiagram& d, std::size_t n,
                                            double tol_rel = kDefaultTolRel, unsigned workers = 0);

/// CSV with header theta1,...,thetaMu,sigma,eta,near_degenerate.
std::string grid_csv(const std::vector<SignatureResult>& grid, std::size_t num_colors);

struct ConwayResult {
  std::size_t num_vars = 0;
  /// Nabla squared from the reduced tau determinant.
  RationalFn nabla_sq;
  /// det(K~) / (t1 - t1^-1), leading coefficient positive. For knots this
  /// has a denominator (t1 - t1^-1).
  RationalFn nabla;
  LaurentPoly det_K_tilde;
  RationalFn det_tau_tilde;
  /// Symmetrized Alexander polynomial in t (integer or half-integer powers),
  /// leading coefficient positive.
  LaurentPoly alexander;
  /// nabla^2 == nabla_sq exactly.
  bool consistency_ok = false;
};

/// Throws ValidationError for disconnected diagrams.
ConwayResult conway(const ColoredDiagram& d);

/// Alexander polynomial from a nabla representative: substitute t_i^2 -> t_i
/// and center the support. Throws ConsistencyError when the exponents do not
/// allow it.
LaurentPoly alexander_from_nabla(const LaurentPoly& nabla);

/// Multiplies by the sign and monomial that make the support symmetric about
/// the origin and the leading coefficient positive.
LaurentPoly symmetrize(const LaurentPoly& a);

/// Negates if the leading coefficient is negative.
LaurentPoly positive_lead(const LaurentPoly& a);

struct ColorMergeCheck {
  bool skipped = false;
  bool passed = false;
  /// sigma of the merged diagram at p.
  int sigma_merged = 0;
  /// sigma of the original diagram at the lifted point.
  int sigma_original = 0;
  int linking_sum = 0;
  std::string note;
};

/// Checks sigma_merged(p) == sigma_original(lift(p)) - sum lk(c1, c2), where
/// p has one angle per color of the merged diagram and the lift repeats the
/// merged angle on both c1 and c2. Near-degenerate points are skipped.
ColorMergeCheck check_color_merge(const ColoredDiagram& d, int c1, int c2, const TorusPoint& p,
                                  double tol_rel = kDefaultTolRel);

struct ConstancyReport {
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::size_t violations = 0;
};

/// For grid neighbours with eta = 0 on both ends, samples det of the reduced
/// tau along the segment at 2^depth + 1 points; when it stays away from zero
/// sigma must agree at the ends.
ConstancyReport check_local_constancy(const ColoredDiagram& d, const std::vector<SignatureResult>& grid,
                                      std::size_t n, int depth = 8, double tol_rel = kDefaultTolRel);

nlohmann::json to_json(const SignatureResult& s);
nlohmann::json to_json(const ConwayResult& c);

}  // namespace kashaev
