#pragma once

// Homology lattices of rational surfaces with an explicit Gram matrix, the
// canonical class, exceptional-class enumeration and the log Kodaira classifier.

#include "wpp/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpp::homlat {

using IntMatrix = std::vector<std::vector<Int>>;

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1; throws Precondition otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Coefficient vector in a lattice basis.
struct HClass {
  std::vector<Int> coeffs;

  HClass() = default;
  explicit HClass(std::size_t rank) : coeffs(rank, 0) {}
  explicit HClass(std::vector<Int> c) : coeffs(std::move(c)) {}
  HClass(std::initializer_list<long> c);

  std::size_t rank() const { return coeffs.size(); }
  const Int& operator[](std::size_t i) const { return coeffs[i]; }
  Int& operator[](std::size_t i) { return coeffs[i]; }

  static HClass unit(std::size_t rank, std::size_t i);

  HClass& operator+=(const HClass& o);
  HClass& operator-=(const HClass& o);
  friend HClass operator+(HClass a, const HClass& b) { return a += b; }
  friend HClass operator-(HClass a, const HClass& b) { return a -= b; }
  friend HClass operator*(const Int& k, HClass a);
  HClass operator-() const;

  bool operator==(const HClass&) const = default;
  friend bool operator<(const HClass& a, const HClass& b) { return a.coeffs < b.coeffs; }

  /// Copy padded with zeros (new trailing basis vectors).
  HClass extended(std::size_t rank) const;
};

std::string to_string(const HClass& c);

/// Which minimal model the basis comes from.
///  ProjectivePlane: H, E_1..E_n with Gram diag(1,-1,..,-1).
///  Hirzebruch:      f, s, e_1..e_m with Gram [[0,1],[1,-k]] + diag(-1,..).
///  General:         anything else (plumbing of abstract strings, blowdowns).
enum class BasisTag { ProjectivePlane, Hirzebruch, General };

class Lattice {
 public:
  Lattice() = default;

  /// CP^2 # n with K = -3H + sum E_i.
  static Lattice projective_plane(std::size_t n);
  /// Hirzebruch F_k blown up m times, basis (f, s, e_1..e_m), K = -2s-(k+2)f+sum e_i.
  static Lattice hirzebruch(long k, std::size_t m);
  /// Arbitrary symmetric Gram with the K-pairing covector; K class optional.
  static Lattice general(IntMatrix gram, std::vector<Int> k_pair, std::optional<HClass> k_class);

  std::size_t rank() const { return rows_.size(); }
  /// Dense Gram matrix (built on demand; storage is sparse).
  IntMatrix gram() const;
  Int entry(std::size_t i, std::size_t j) const;
  BasisTag tag() const { return tag_; }
  long hirzebruch_k() const { return hirz_k_; }
  /// K . b_i for each basis vector.
  const std::vector<Int>& k_pair() const { return k_pair_; }
  const std::optional<HClass>& canonical() const { return k_class_; }
  /// Canonical class; throws Precondition when unknown.
  const HClass& K() const;

  Int pair(const HClass& a, const HClass& b) const;
  Int square(const HClass& a) const { return pair(a, a); }
  Int k_dot(const HClass& a) const;

  /// Appends e with e^2 = -1, K.e = -1 (K gains +e).
  Lattice blown_up() const;
  /// In-place form of blown_up.
  Lattice& blow_up();

  bool operator==(const Lattice& o) const {
    return rows_ == o.rows_ && k_pair_ == o.k_pair_ && k_class_ == o.k_class_ && tag_ == o.tag_ &&
           hirz_k_ == o.hirz_k_;
  }

 private:
  std::vector<std::vector<std::pair<std::size_t, Int>>> rows_;  // nonzero Gram entries, by column
  std::vector<Int> k_pair_;
  std::optional<HClass> k_class_;
  BasisTag tag_ = BasisTag::General;
  long hirz_k_ = 0;
};

/// Throws RankMismatch if either class has the wrong length.
Int pair(const Lattice& L, const HClass& a, const HClass& b);
/// A^2 + K.A + 2; zero for classes of embedded spheres.
Int adjunction_defect(const Lattice& L, const HClass& a);
/// A^2 - K.A.
Int sw_index(const Lattice& L, const HClass& a);

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};
/// Sylvester inertia by exact congruence diagonalization over the rationals.
Inertia inertia(const IntMatrix& gram);
inline Inertia inertia(const Lattice& L) { return inertia(L.gram()); }

/// Result of contracting an exceptional class E: the new lattice is E-perp,
/// and `coords` maps a class x of the old lattice to the coordinates of its
/// projection x + (x.E)E in the new basis.
struct Blowdown {
  Lattice lattice;
  IntMatrix coords;  // (rank-1) x rank
  HClass project(const Lattice& old, const HClass& E, const HClass& x) const;
};
/// Throws NotBlowdownable unless E^2 = -1 and K.E = -1.
Blowdown blow_down(const Lattice& L, const HClass& E);

/// Symplectic area functional: values[i] = [omega] . b_i.
struct AreaForm {
  std::vector<Rational> values;
  Rational operator()(const HClass& a) const;
};

/// Change of basis to a CP^2 # n chart: new = fwd * old, old = inv * new.
struct Chart {
  Lattice target;
  IntMatrix fwd, inv;
  HClass to_target(const HClass& x) const;
  HClass from_target(const HClass& y) const;
  AreaForm area_to_target(const AreaForm& a) const;
};
/// Available for ProjectivePlane tags, odd Hirzebruch, and even Hirzebruch
/// with at least one blowup; nullopt otherwise.
std::optional<Chart> projective_chart(const Lattice& L);

/// True iff E (CP^2 # n coordinates) lies in the Cremona orbit of an E_i,
/// i.e. it is the class of a smooth exceptional sphere for the standard K.
bool in_cremona_orbit(const HClass& E);

enum class ExceptionalFilter {
  Lattice,  ///< E^2 = -1, K.E = -1, area > 0 only
  Cremona,  ///< additionally require membership in the Cremona orbit of E_1
};

struct ExceptionalOptions {
  std::optional<Rational> area_cap;
  long coeff_bound = 6;
  ExceptionalFilter filter = ExceptionalFilter::Cremona;
  bool parallel = true;
};

/// Linear side condition E . X >= bound on candidate classes.
struct PairingConstraint {
  HClass with;
  Int at_least;
};

struct ExceptionalSet {
  std::vector<HClass> classes;  ///< sorted lexicographically (leading coefficient first)
  bool possibly_incomplete = false;
  bool operator==(const ExceptionalSet&) const = default;
};

/// All classes with E^2 = -1, K.E = -1, 0 < area(E) <= cap, every coordinate
/// (in the CP^2 chart) of absolute value <= coeff_bound, satisfying all extra
/// constraints. Results are returned in the lattice's own basis.
ExceptionalSet enumerate_exceptional(const Lattice& L, const AreaForm& area, const ExceptionalOptions& opt,
                                     const std::vector<PairingConstraint>& extra = {});

/// A divisor given as connected components, each a list of sphere classes.
using ComponentClasses = std::vector<std::vector<HClass>>;

/// Exceptional classes pairing >= 0 with the total class of every component.
ExceptionalSet log_exceptional(const Lattice& L, const AreaForm& area, const ComponentClasses& D,
                               const ExceptionalOptions& opt);

/// Log exceptional classes pairing >= 1 with both D_i and D_j. Throws Precondition if i == j.
ExceptionalSet connecting_log_exceptional(const Lattice& L, const AreaForm& area, const ComponentClasses& D,
                                          std::size_t i, std::size_t j, const ExceptionalOptions& opt);

struct Gap {
  Rational value;
  bool lower_bound_only = false;  ///< enumeration may have missed classes
  std::vector<HClass> witnesses;
};

/// Maximal area over the connecting set, 0 when empty.
Gap exceptional_gap(const Lattice& L, const AreaForm& area, const ComponentClasses& D, std::size_t i,
                    std::size_t j, const ExceptionalOptions& opt);

enum class Kodaira { MinusInfinity, Zero, One, Two };
std::string to_string(Kodaira k);

/// Four-case classifier from [omega].(K+[D]) and (K+[D])^2. The pattern
/// (0, s != 0 with s > 0) is not covered and raises Unclassified.
Kodaira log_kodaira(const Rational& area_adjoint, const Int& square_adjoint);

namespace detail {
/// Direct lattice search over |coefficients| <= coeff_bound, with the filter
/// applied at the leaves. Reference for the orbit enumeration below.
ExceptionalSet enumerate_cp2_search(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                    const std::vector<PairingConstraint>& extra);
/// Serial enumeration in a CP^2 # n lattice. Under the Cremona filter this
/// walks the orbit of E_1 up to the degree bound instead of the lattice.
ExceptionalSet enumerate_cp2_serial(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                    const std::vector<PairingConstraint>& extra);
/// OpenMP version of the above, parallel over orbit types (or degrees).
ExceptionalSet enumerate_cp2_parallel(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                      const std::vector<PairingConstraint>& extra);
}  // namespace detail

}  // namespace wpp::homlat
