#pragma once

// Oriented sphere strings, their Delta-sequences, blowup/blowdown rewriting of
// divisor configurations, fiber classes and resolution fiber classes.

#include "wpp/arith.hpp"
#include "wpp/homlat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wpp::strings {

using homlat::HClass;
using homlat::IntMatrix;
using homlat::Lattice;
using SelfInts = std::vector<std::int64_t>;

/// Chain of spheres S_1..S_n with self-intersections s_i (b_i = -s_i).
struct OrientedString {
  SelfInts selfints;
  std::optional<std::vector<HClass>> classes;

  std::size_t length() const { return selfints.size(); }
  bool is_hj() const;
  OrientedString reversed() const;
  bool operator==(const OrientedString&) const = default;
};

/// Delta_1 = 1, Delta_{l+1} = det of the leading l x l minor of M(S).
struct DeltaSeq {
  std::vector<Int> deltas;
  bool operator==(const DeltaSeq&) const = default;
};

/// Negative intersection matrix: b_i on the diagonal, -1 beside it.
IntMatrix negative_intersection_matrix(std::span<const std::int64_t> selfints);

DeltaSeq delta_sequence(std::span<const std::int64_t> selfints);
inline DeltaSeq delta_sequence(const OrientedString& s) { return delta_sequence(s.selfints); }

/// Sylvester: every Delta_l > 0.
bool is_negative_definite(std::span<const std::int64_t> selfints);

/// -3 * (number of components) - sum of self-intersections.
Int xi_invariant(std::span<const std::int64_t> selfints);

struct Component {
  HClass cls;
  std::string label;
  bool operator==(const Component&) const = default;
};

/// Spheres in a lattice; `adjacency` caches all pairwise intersections.
struct DivisorConfig {
  Lattice lattice;
  std::vector<Component> components;
  IntMatrix adjacency;

  /// Plumbing lattice of an abstract string: basis = components, K from adjunction.
  static DivisorConfig from_string(std::span<const std::int64_t> selfints, const std::string& label = "S");
  static DivisorConfig from_classes(Lattice L, std::vector<Component> comps);

  std::size_t size() const { return components.size(); }
  std::int64_t selfint(std::size_t i) const;
  SelfInts selfints() const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  /// The components in list order viewed as an oriented string with classes.
  OrientedString as_string() const;
  void refresh();
};

/// New component e between adjacent components i and j; both lose e.
DivisorConfig toric_blowup(const DivisorConfig& D, std::size_t i, std::size_t j);
/// New component e attached to i only; i loses e.
DivisorConfig half_toric_blowup(const DivisorConfig& D, std::size_t i);
/// i loses e; the exceptional sphere is not part of the divisor.
DivisorConfig non_toric_blowup(const DivisorConfig& D, std::size_t i);

/// The exterior exceptional sphere may be kept in the divisor (total
/// transform) or left out (union of proper transforms).
enum class ExteriorMode { ProperTransform, TotalTransform };
DivisorConfig exterior_blowup(const DivisorConfig& D, ExteriorMode mode = ExteriorMode::ProperTransform);

enum class BlowdownKind { Toric, HalfToric };
struct BlowdownResult {
  DivisorConfig config;
  BlowdownKind kind;
};
/// Contracts component i (square -1, K-pairing -1). Toric when i has two
/// neighbors in D, half-toric otherwise. Throws NotBlowdownable.
BlowdownResult blowdown(const DivisorConfig& D, std::size_t i);

/// F_k = sum_{i<=k} Delta_i [S_i] with its numerics (k is 1-based).
struct FiberClass {
  HClass F;
  Int square, k_dot;
  DeltaSeq deltas;
  /// (p, q) = (-Delta_{k+1}, Delta_k) when Delta_k > 0 >= Delta_{k+1}.
  std::optional<std::pair<Int, Int>> pq;
};
/// Throws MissingClasses without classes and LemmaViolated if the pairing
/// identities fail (classes inconsistent with the self-intersections).
FiberClass fiber_class(const Lattice& L, const OrientedString& S, std::size_t k);

struct ResolvedFiber {
  DivisorConfig config;            ///< after the L toric blowups
  std::vector<std::size_t> chain;  ///< the transformed string, as config indices
  std::vector<std::size_t> c_index;  ///< config index of C~_1..C_L
  HClass F_tilde;                  ///< F_k - sum m_i e_i
  HClass F_k;                      ///< F_k in the blown-up lattice
  arith::WeightSeq weights;
};
/// `chain` lists the config indices of the string S_1..S_n in order; k is 1-based.
/// Throws NotAtSignChange unless Delta_k > 0 >= Delta_{k+1}.
ResolvedFiber resolution_fiber_class(const DivisorConfig& D, const std::vector<std::size_t>& chain, std::size_t k);
ResolvedFiber resolution_fiber_class(const DivisorConfig& D, std::size_t k);

/// Every string reachable from `start` (exactly one entry -1) by toric or
/// half-toric blowdowns has at most two -1 entries, adjacent when two.
bool adjacent_ones_check(const SelfInts& start);

}  // namespace wpp::strings
