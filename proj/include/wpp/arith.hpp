#pragma once

// Number-theoretic primitives: weight residues, negative (Hirzebruch-Jung)
// continued fractions and their duality, and weight sequences of coprime pairs.

#include "wpp/numeric.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wpp::arith {

/// Pairwise coprime weights with the six residues
///   a_b*b = c, a_c*c = b (mod a),  b_a*a = c, b_c*c = a (mod b),
///   c_a*a = b, c_b*b = a (mod c),
/// each residue in (0, modulus).
struct WeightTriple {
  Int a, b, c;
  Int a_b, a_c;
  Int b_a, b_c;
  Int c_a, c_b;

  bool operator==(const WeightTriple&) const = default;
};

/// Throws NotPairwiseCoprime or DegenerateWeight (some weight is 1).
WeightTriple make_weight_triple(const Int& a, const Int& b, const Int& c);

/// The same triple relabeled so that a < b < c, together with the permutation
/// `order` such that sorted weight i is input weight order[i].
struct CanonicalTriple {
  WeightTriple sorted;
  std::array<int, 3> order;
};
CanonicalTriple canonicalize(const WeightTriple& w);

/// Inverse of x modulo m in [0, m). Throws NotCoprime if gcd(x, m) != 1.
Int mod_inverse(const Int& x, const Int& m);

/// Entries b_1..b_k with p/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)).
struct NegCF {
  std::vector<std::int64_t> entries;
  Int p, q;

  bool operator==(const NegCF&) const = default;
};

/// Hirzebruch-Jung expansion of p/q; all entries >= 2. Throws InvalidFraction
/// unless p > q >= 1 and gcd(p, q) = 1.
NegCF neg_cf_expand(const Int& p, const Int& q);

/// Exact value of [b_1, ..., b_k] as a reduced fraction. Any integer entries
/// are accepted; a zero intermediate denominator yields InvalidFraction.
Rational neg_cf_value(std::span<const std::int64_t> entries);

/// q' in (0, p) with q*q' = 1 (mod p); its expansion is the reversal of p/q's.
Int neg_cf_dual(const Int& p, const Int& q);

/// Square decomposition of a p x q rectangle: (p,q) -> (|p-q|, min(p,q)) until
/// (1,1), collecting min(p_i, q_i). W(0,1) is empty.
struct WeightSeq {
  Int p, q;
  std::vector<Int> m;
  /// (p_i, q_i) visited by the recursion, one per entry of m.
  std::vector<std::pair<Int, Int>> steps;
};

/// Throws NotCoprime when gcd(p, q) != 1 (which includes (0,0)).
WeightSeq weight_sequence(const Int& p, const Int& q);

}  // namespace wpp::arith
