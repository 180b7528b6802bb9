#pragma once

// Exact lattice polygons: the six moment triangles of CP(a,b,c), corner types,
// corner chopping, edge self-intersections and homology class assignment.

#include "wpp/arith.hpp"
#include "wpp/homlat.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpp::polygon {

struct Vec2 {
  Int x, y;
  bool operator==(const Vec2&) const = default;
};
inline Int det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
};

/// Half-plane <normal, x> >= level with a primitive inward normal. The edge
/// runs counterclockwise from vertex i to vertex i+1 as vertex_i + length*dir.
struct Edge {
  Vec2 normal;
  Rational level;
  std::string label;
  Vec2 dir;
  Rational length;
  bool operator==(const Edge&) const = default;
};

struct LatticePolygon {
  std::vector<Edge> edges;
  std::vector<Point> vertices;            ///< vertex i starts edge i
  std::vector<std::string> vertex_labels;

  std::size_t size() const { return edges.size(); }
  std::size_t prev(std::size_t i) const { return (i + size() - 1) % size(); }
  std::size_t next(std::size_t i) const { return (i + 1) % size(); }

  /// Vertices in either orientation; stored counterclockwise. `edge_labels[i]`
  /// names the edge from vertex i to vertex i+1 of the input order.
  static LatticePolygon from_vertices(std::vector<Point> pts, std::vector<std::string> vertex_labels,
                                      std::vector<std::string> edge_labels);
  /// Rebuilds vertices, directions and lengths from the half-planes. Throws
  /// ChopsOverlap if an edge has non-positive length or normals do not turn left.
  static LatticePolygon from_halfplanes(std::vector<Edge> edges, std::vector<std::string> vertex_labels);

  Rational twice_area() const;
  bool is_delzant() const;
  std::optional<std::size_t> find_edge(std::string_view label) const;
  std::optional<std::size_t> find_vertex(std::string_view label) const;
};

/// The triangles T_1..T_6 with vertices labeled A, B, C and edges N_a, N_b, N_c
/// (N_x is the edge opposite X).
std::array<LatticePolygon, 6> six_presentations(const arith::WeightTriple& w);
/// T_index alone, index in 1..6.
LatticePolygon presentation(const arith::WeightTriple& w, int index);

struct CornerType {
  Int r, q;
  bool operator==(const CornerType&) const = default;
};
/// r = det(n_prev, n_next) at vertex v and q in [0, r) such that the chopped
/// string read from the incoming edge is the expansion of r/q. With
/// `from_outgoing` the string is read from the other side (q becomes its dual).
CornerType corner_type(const LatticePolygon& P, std::size_t v, bool from_outgoing = false);

/// Inward normals of the resolving fan at vertex v, from the incoming side.
std::vector<Vec2> resolving_normals(const LatticePolygon& P, std::size_t v);

struct ChopResult {
  LatticePolygon polygon;
  std::size_t first_edge = 0, count = 0;
};
/// Chops vertex v with depths eps[j] for the j-th new edge; new edges are
/// labeled <vertex label><j+1>. Throws Precondition for a Delzant corner or a
/// wrong number of depths, ChopsOverlap if the chops do not nest.
ChopResult chop_corner(const LatticePolygon& P, std::size_t v, const std::vector<Rational>& eps);
/// Toric blowup of a Delzant corner: one cut with normal n_prev + n_next.
ChopResult blowup_corner(const LatticePolygon& P, std::size_t v, const Rational& eps);

/// Truncation depths eps_j = shortest_adjacent_edge * first * ratio^j.
struct EpsSchedule {
  Rational first{1, 4};
  Rational ratio{1, 3};
  /// Parses "first:ratio", e.g. "1/4:1/3". Throws std::invalid_argument.
  static EpsSchedule parse(std::string_view text);
  /// WPP_EPS_SCHEDULE if set, else the default.
  static EpsSchedule from_env();
  std::vector<Rational> depths(const Rational& shortest, std::size_t k) const;
  std::string to_string() const;
};

/// Chops every non-Delzant corner, with depths from the unchopped polygon.
LatticePolygon resolve_corners(const LatticePolygon& P, const EpsSchedule& sched = {});

/// s with n_prev + n_next = -s * n_i. Throws NotDelzantNeighborhood.
std::int64_t edge_selfint(const LatticePolygon& P, std::size_t edge);

struct ClassAssignment {
  homlat::Lattice lattice;
  std::vector<homlat::HClass> edge_classes;
  std::vector<std::int64_t> selfints;
  homlat::AreaForm area;
  /// Edge contracted at each reduction step (original indices); e_i is the
  /// exceptional class of the (count - i)-th contraction.
  std::vector<std::size_t> contracted;
};
/// Reduces to CP^2 or a Hirzebruch surface by contracting the smallest-index
/// -1 edge, then replays the blowups. Requires a Delzant polygon.
ClassAssignment assign_classes(const LatticePolygon& P);

/// Rewrites a Hirzebruch-based assignment in the CP^2 # n basis (same change
/// of basis as homlat::projective_chart, applied in closed form). Returns the
/// input unchanged when it is already projective; nullopt when no chart exists.
std::optional<ClassAssignment> to_projective_basis(const ClassAssignment& ca);

}  // namespace wpp::polygon
