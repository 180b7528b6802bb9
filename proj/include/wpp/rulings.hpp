#pragma once

// Affine rulings on a minimal resolution: the combined strings through a
// connector, the truncation indices nu, the common fiber class and its cusp.

#include "wpp/resolution.hpp"
#include "wpp/strings.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpp::rulings {

using homlat::HClass;
using strings::DeltaSeq;
using strings::OrientedString;

/// The string the ruling meets. With Role::C the fibers cross S_c; the other
/// roles rotate the boundary cycle so that S_a or S_b takes that place.
enum class Role { A, B, C };
std::string to_string(Role r);

struct CombinedString {
  OrientedString string;            ///< self-intersections and classes
  std::vector<std::string> labels;  ///< e.g. A1, N_b, C2
  std::vector<int> target_index;    ///< 1-based index into the target string, 0 elsewhere
};

/// For Role::C: S_ac = A_1..A_ka, N_b, C_1..C_kc and
/// S_bc = B_kb..B_1, N_a, C_kc..C_1.
std::pair<CombinedString, CombinedString> combined_strings(const resolution::ResolutionPair& R,
                                                           Role role = Role::C);

struct NuIndices {
  std::size_t nu_a = 0, nu_b = 0;  ///< indices into the target string, same numbering
  DeltaSeq deltas_a, deltas_b;     ///< of the truncations S_ac^{<=nu_a}, S_bc^{>=nu_b}
  std::size_t k_a = 0, k_b = 0;    ///< truncation lengths
};
/// nu_a = least nu with S_ac^{<=nu} not negative definite; nu_b = greatest nu
/// with S_bc^{>=nu} not negative definite. Throws NoSignChange.
NuIndices nu_indices(const resolution::ResolutionPair& R, Role role = Role::C);

enum class RulingCase { EmbeddedFiber, Unicuspidal };
std::string to_string(RulingCase c);

struct RulingData {
  Role role = Role::C;
  std::size_t nu_a = 0, nu_b = 0;
  HClass F;
  Int pa, qa, pb, qb;
  RulingCase kind = RulingCase::EmbeddedFiber;
  std::optional<std::pair<std::size_t, std::size_t>> cusp_location;  ///< (nu_a, nu_b) in the target string
  std::optional<std::size_t> meet_component;                          ///< nu_a + 1
  Int selfint, k_dot;
  Rational area;
  DeltaSeq deltas_a, deltas_b;
  std::size_t k_a = 0, k_b = 0;
  /// F paired with every string component and connector, boundary-cycle order.
  std::vector<std::pair<std::string, Int>> profile;
};

/// Checks F_a = F_b, the case split against the connector square, the
/// intersection profile and F^2, K.F. LemmaViolated on failure for Role::C;
/// the other roles are computed and reported with only the lattice identities
/// enforced.
RulingData ruling(const resolution::ResolutionPair& R, Role role = Role::C);

struct RulingResolution {
  strings::ResolvedFiber fiber;
  std::size_t blowups = 0;
  Int square, k_dot;
};
/// Resolves the cusp with the weight sequence W(p_a, q_a). Precondition
/// unless the ruling is unicuspidal.
RulingResolution ruling_resolution(const resolution::ResolutionPair& R, const RulingData& rd);

}  // namespace wpp::rulings
