#pragma once

// The symplectic minimal resolution of CP(a,b,c) built from a moment
// triangle, and the predicates and lemmas evaluated on it.

#include "wpp/arith.hpp"
#include "wpp/homlat.hpp"
#include "wpp/polygon.hpp"
#include "wpp/strings.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wpp::resolution {

using homlat::HClass;
using strings::OrientedString;
using strings::SelfInts;

struct Connector {
  HClass cls;
  std::int64_t selfint = 0;
  Rational area;
  std::size_t edge = 0;  ///< polygon edge index
};

/// Strings and connectors are indexed 0, 1, 2 for a, b, c with a < b < c.
/// Going around the boundary cycle the components read
///   N_c, A_1..A_ka, N_b, C_1..C_kc, N_a, B_1..B_kb,
/// and each string is stored in that order.
struct ResolutionPair {
  arith::WeightTriple weights;   ///< canonical, a < b < c
  std::array<int, 3> order{};    ///< canonical weight i is input weight order[i]
  int presentation = 1;          ///< 1..6
  polygon::EpsSchedule eps;
  polygon::LatticePolygon polygon;
  homlat::Lattice lattice;       ///< CP^2 # n
  std::vector<HClass> edge_classes;
  homlat::AreaForm area;
  std::array<OrientedString, 3> strings;
  std::array<std::vector<std::size_t>, 3> string_edges;
  std::array<Connector, 3> connectors;
  bool ccw_is_cycle = true;  ///< counterclockwise traversal follows the cycle above

  std::size_t n() const { return lattice.rank() - 1; }
  /// Each string as one connected component of D.
  homlat::ComponentClasses components() const;
  /// All string and connector classes.
  std::vector<HClass> all_classes() const;
};

/// Throws Precondition for a presentation outside 1..6; chop errors propagate;
/// LemmaViolated if a structural invariant fails.
ResolutionPair build_resolution(const arith::WeightTriple& w, int presentation,
                                const polygon::EpsSchedule& eps = {});

/// ([N_a]^2, [N_b]^2, [N_c]^2); LemmaViolated unless -1, -1 and >= -1.
std::array<std::int64_t, 3> connector_selfints(const ResolutionPair& R);

enum class GapMethod {
  Structural,  ///< gap between two strings = area of their connector when it is exceptional
  Enumerate,   ///< maximal area over enumerated connecting log exceptional classes
};

struct OrientationMatch {
  std::array<int, 3> perm{};          ///< string perm[i] plays the role of weight i
  std::array<bool, 3> reversed{};
};

struct Def13Report {
  bool full = false;
  bool abc_type = false;
  std::optional<OrientationMatch> match;
  bool gap_admissible = false;
  /// e(S_b,S_c), e(S_a,S_c), e(S_a,S_b).
  std::array<Rational, 3> gaps;
  bool gaps_lower_bound_only = false;
  Rational adjoint_area;  ///< [omega].(K + [D])
  bool sub_toric = true;
  GapMethod method = GapMethod::Structural;
};

Def13Report check_def13(const ResolutionPair& R, GapMethod method = GapMethod::Structural,
                        const homlat::ExceptionalOptions& opt = {});

/// Strings of a cyclic quotient: r/q of the input weights with labels (a, b, c).
struct TwoMinus2 {
  bool both_minus2 = false;
  bool c_matches_formula = false;  ///< c = k*a*b - a - b for some k >= 1
  std::optional<long> k;
  std::optional<SelfInts> predicted_third;
};
/// Requires a > b > 1 (labels as given, not sorted); Precondition otherwise.
TwoMinus2 two_minus2_strings(const arith::WeightTriple& w);

/// For every labeling x > y of two weights with z the third: the arithmetic
/// classification agrees with the strings of R (both -2 exactly when
/// z = kxy - x - y, third string as predicted up to reversal). `applicable`
/// counts labelings where both strings are -2.
struct Lemma38Check {
  bool consistent = true;
  int applicable = 0;
};
Lemma38Check lemma38_check(const ResolutionPair& R);

/// Adjunction defect 0 on every string component and connector.
bool adjunction_holds(const ResolutionPair& R);

/// Sum of -selfint over all three strings >= 3n - 6.
bool corollary_3n6(const ResolutionPair& R);
Int string_weight_sum(const ResolutionPair& R);

struct TorelliReport {
  bool found = false;
  /// E_i of the first pair maps to E_{perm[i]} of the second.
  std::vector<std::size_t> perm;
  std::string note;
};
/// Searches permutations of E_1..E_n fixing H. Precondition unless both pairs
/// share the same canonical triple.
TorelliReport torelli_compare(const ResolutionPair& R1, const ResolutionPair& R2);

/// Connecting gap classes predicted by the structure of the resolution:
/// index 0 for (S_b,S_c), 1 for (S_a,S_c), 2 for (S_a,S_b).
std::array<std::vector<HClass>, 3> predicted_gap_sets(const ResolutionPair& R);

struct GapOracleResult {
  std::array<std::vector<HClass>, 3> expected, found;
  bool exact = true;            ///< found == expected for all three pairs
  bool contains_expected = true;
  bool possibly_incomplete = false;
};
GapOracleResult gap_oracle(const ResolutionPair& R, const homlat::ExceptionalOptions& opt);

}  // namespace wpp::resolution
