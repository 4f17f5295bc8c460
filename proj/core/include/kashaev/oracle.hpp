#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kashaev/diagram.hpp"
#include "kashaev/laurent.hpp"

namespace kashaev {

struct Letter {
  int arc = 0;
  int power = 1;  // +1 or -1
};

/// out = over^e in over^-e, stored as the relator word.
struct WirtingerRelation {
  int over = 0;
  int in = 0;
  int out = 0;
  int sign = 0;
  std::vector<Letter> word;
};

struct WirtingerPresentation {
  std::size_t num_vars = 0;
  /// Color (1-based) of each arc.
  std::vector<int> arc_colors;
  std::vector<WirtingerRelation> relations;
  /// Some component never passes under another strand, so the link splits.
  bool has_overpass_only_component = false;
};

/// Arcs are maximal over-strand segments. Requires a connected diagram with
/// at least one crossing; throws ValidationError otherwise.
WirtingerPresentation wirtinger(const ColoredDiagram& d);

/// Abelianized Fox Jacobian, relations by arcs, row-major.
std::vector<LaurentPoly> fox_matrix(const WirtingerPresentation& w);

/// Every row of the Fox Jacobian evaluated at t = 1 sums to zero.
bool fox_rows_balanced(const WirtingerPresentation& w, const std::vector<LaurentPoly>& fox);

struct FoxAlexander {
  /// All candidate minors agreed up to units.
  bool conclusive = false;
  /// Symmetrized representative with positive leading coefficient.
  LaurentPoly polynomial;
  int deleted_arc = -1;
  std::size_t candidates = 0;
  std::string note;
};

/// Deletes the column of one arc of color c (a color on at least two arcs
/// when possible), takes every maximal minor obtained by deleting one row,
/// divides by (t_c - 1) when there are several colors, and accepts the
/// result when all candidates agree up to units.
FoxAlexander alexander_via_fox(const WirtingerPresentation& w);

/// a == +-monomial * b, half-integer monomials allowed.
bool compare_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace kashaev
