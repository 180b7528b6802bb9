#include "wpp/polygon.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace wpp::polygon {

namespace {

using homlat::HClass;
using homlat::Lattice;

Rational dot(const Vec2& n, const Point& p) { return Rational(n.x) * p.x + Rational(n.y) * p.y; }

Point intersect(const Edge& e1, const Edge& e2) {
  Int d = det(e1.normal, e2.normal);
  if (d == 0) fail(ErrorCode::ChopsOverlap, "parallel consecutive edges");
  if (d == 1)
    return {e1.level * Rational(e2.normal.y) - e2.level * Rational(e1.normal.y),
            Rational(e1.normal.x) * e2.level - Rational(e2.normal.x) * e1.level};
  Rational D(d);
  Point p{(e1.level * Rational(e2.normal.y) - e2.level * Rational(e1.normal.y)) / D,
          (Rational(e1.normal.x) * e2.level - Rational(e2.normal.x) * e1.level) / D};
  return p;
}

Vec2 direction_of(const Vec2& n) { return {n.y, -n.x}; }

// Length of `from -> to` along `dir`; the two are parallel by construction.
Rational length_along(const Point& from, const Point& to, const Vec2& dir) {
  if (dir.x != 0) return (to.x - from.x) / Rational(dir.x);
  return (to.y - from.y) / Rational(dir.y);
}

void set_length(std::vector<Edge>& edges, const std::vector<Point>& verts, std::size_t i) {
  std::size_t j = (i + 1) % edges.size();
  edges[i].length = length_along(verts[i], verts[j], edges[i].dir);
  if (sgn(edges[i].length) <= 0)
    fail(ErrorCode::ChopsOverlap, "edge " + edges[i].label + " has non-positive length");
}

// Primitive integer direction and lattice length of a rational vector.
std::pair<Vec2, Rational> primitive(const Rational& dx, const Rational& dy) {
  Int den;
  mpz_lcm(den.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  Int ix = dx.get_num() * (den / dx.get_den());
  Int iy = dy.get_num() * (den / dy.get_den());
  Int g = gcd(ix, iy);
  if (g == 0) fail(ErrorCode::Precondition, "repeated vertex");
  return {{ix / g, iy / g}, make_rational(g, den)};
}

}  // namespace

LatticePolygon LatticePolygon::from_vertices(std::vector<Point> pts, std::vector<std::string> vlabels,
                                             std::vector<std::string> elabels) {
  std::size_t n = pts.size();
  if (n < 3) fail(ErrorCode::Precondition, "polygon needs at least 3 vertices");
  vlabels.resize(n);
  elabels.resize(n);
  Rational twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % n];
    twice += p.x * q.y - p.y * q.x;
  }
  if (sgn(twice) == 0) fail(ErrorCode::Precondition, "degenerate polygon");
  if (sgn(twice) < 0) {
    // Reverse the cycle; edge i of the reversed order joins new vertices i, i+1.
    std::reverse(pts.begin(), pts.end());
    std::reverse(vlabels.begin(), vlabels.end());
    std::vector<std::string> el(n);
    for (std::size_t i = 0; i < n; ++i) el[i] = elabels[(2 * n - 2 - i) % n];
    elabels = std::move(el);
  }
  LatticePolygon P;
  P.vertices = std::move(pts);
  P.vertex_labels = std::move(vlabels);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = P.vertices[i];
    const auto& q = P.vertices[(i + 1) % n];
    auto [d, len] = primitive(q.x - p.x, q.y - p.y);
    Edge e;
    e.normal = {-d.y, d.x};
    e.dir = d;
    e.length = len;
    e.level = dot(e.normal, p);
    e.label = elabels[i];
    P.edges.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (det(P.edges[i].normal, P.edges[(i + 1) % n].normal) <= 0)
      fail(ErrorCode::Precondition, "polygon is not strictly convex");
  return P;
}

LatticePolygon LatticePolygon::from_halfplanes(std::vector<Edge> edges, std::vector<std::string> vlabels) {
  std::size_t n = edges.size();
  if (n < 3) fail(ErrorCode::ChopsOverlap, "fewer than 3 edges");
  LatticePolygon P;
  P.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = edges[(i + n - 1) % n];
    if (det(prev.normal, edges[i].normal) <= 0) fail(ErrorCode::ChopsOverlap, "normals do not turn left");
    P.vertices[i] = intersect(prev, edges[i]);
    edges[i].dir = direction_of(edges[i].normal);
  }
  for (std::size_t i = 0; i < n; ++i) set_length(edges, P.vertices, i);
  P.edges = std::move(edges);
  vlabels.resize(n);
  P.vertex_labels = std::move(vlabels);
  return P;
}

Rational LatticePolygon::twice_area() const {
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[next(i)];
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

bool LatticePolygon::is_delzant() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (det(edges[prev(i)].normal, edges[i].normal) != 1) return false;
  return true;
}

std::optional<std::size_t> LatticePolygon::find_edge(std::string_view label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (edges[i].label == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> LatticePolygon::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (vertex_labels[i] == label) return i;
  return std::nullopt;
}

LatticePolygon presentation(const arith::WeightTriple& w, int index) {
  const Int &a = w.a, &b = w.b, &c = w.c;
  auto pt = [](const Int& x, const Int& y) { return Point{Rational(x), Rational(y)}; };
  // Edge labels follow the input vertex order: edge i joins vertices i and i+1.
  auto tri = [&](std::string v0, Point p0, std::string v1, Point p1, std::string v2, Point p2) {
    auto opposite = [](const std::string& x, const std::string& y) {
      for (char ch : std::string("ABC"))
        if (x[0] != ch && y[0] != ch) return std::string("N_") + char(ch - 'A' + 'a');
      return std::string();
    };
    std::vector<std::string> el{opposite(v0, v1), opposite(v1, v2), opposite(v2, v0)};
    return LatticePolygon::from_vertices({p0, p1, p2}, {v0, v1, v2}, el);
  };
  Int zero = 0;
  switch (index) {
    case 1: return tri("A", pt(zero, zero), "B", pt(zero, c), "C", pt(a * b, w.a_b * b));
    case 2: return tri("A", pt(zero, zero), "C", pt(zero, b), "B", pt(a * c, w.a_c * c));
    case 3: return tri("B", pt(zero, zero), "A", pt(zero, c), "C", pt(b * a, w.b_a * a));
    case 4: return tri("B", pt(zero, zero), "C", pt(zero, a), "A", pt(b * c, w.b_c * c));
    case 5: return tri("C", pt(zero, zero), "A", pt(zero, b), "B", pt(c * a, w.c_a * a));
    case 6: return tri("C", pt(zero, zero), "B", pt(zero, a), "A", pt(c * b, w.c_b * b));
  }
  fail(ErrorCode::Precondition, "presentation must be in 1..6");
}

std::array<LatticePolygon, 6> six_presentations(const arith::WeightTriple& w) {
  return {presentation(w, 1), presentation(w, 2), presentation(w, 3),
          presentation(w, 4), presentation(w, 5), presentation(w, 6)};
}

namespace {

struct Fan {
  Int r, q;
  std::vector<Vec2> normals;  // w_1..w_k
};

Fan resolving_fan(const Vec2& u, const Vec2& w) {
  Fan f;
  f.r = det(u, w);
  if (f.r <= 0) fail(ErrorCode::Precondition, "corner is not strictly convex");
  if (f.r == 1) {
    f.q = 0;
    return f;
  }
  // z with det(u, z) = 1, then w = alpha*u + r*z.
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), u.x.get_mpz_t(), u.y.get_mpz_t());
  Vec2 z{-t, s};
  Int alpha = det(w, z);
  f.q = mod_pos(-alpha, f.r);
  Int shift = (alpha + f.q) / f.r;
  Vec2 prev = u;
  Vec2 cur{z.x + shift * u.x, z.y + shift * u.y};
  for (auto bj : arith::neg_cf_expand(f.r, f.q).entries) {
    f.normals.push_back(cur);
    Vec2 nxt{Int(bj) * cur.x - prev.x, Int(bj) * cur.y - prev.y};
    prev = cur;
    cur = nxt;
  }
  if (!(cur == w)) fail(ErrorCode::LemmaViolated, "resolving fan does not close up");
  return f;
}

}  // namespace

CornerType corner_type(const LatticePolygon& P, std::size_t v, bool from_outgoing) {
  if (v >= P.size()) fail(ErrorCode::BadIndex, "vertex index out of range");
  auto f = resolving_fan(P.edges[P.prev(v)].normal, P.edges[v].normal);
  if (f.r == 1) return {1, 0};
  if (from_outgoing) return {f.r, arith::neg_cf_dual(f.r, f.q)};
  return {f.r, f.q};
}

std::vector<Vec2> resolving_normals(const LatticePolygon& P, std::size_t v) {
  if (v >= P.size()) fail(ErrorCode::BadIndex, "vertex index out of range");
  return resolving_fan(P.edges[P.prev(v)].normal, P.edges[v].normal).normals;
}

namespace {

struct CornerCut {
  std::size_t v;
  std::vector<Vec2> normals;
  std::vector<Rational> eps;
};

// Cuts every listed corner of P. At a corner V between normals u and w,
// cut j sits at relative level delta_j = <w_j, V_j - V> + eps_j where
// V_j = V + t_j * dir(w) is the corner left by the previous cuts, so
// t_{j+1} = t_j + eps_j / det(w_j, w). Lengths of the new edges follow from
// the Delzant relation l_j = b_j delta_j - delta_{j-1} - delta_{j+1}. Every
// edge only shrinks as cuts are added, so positive final lengths are
// equivalent to every intermediate chop nesting.
std::pair<LatticePolygon, std::vector<std::size_t>> cut_corners(const LatticePolygon& P,
                                                                std::vector<CornerCut> plan) {
  const std::size_t n = P.size();
  std::sort(plan.begin(), plan.end(), [](const auto& x, const auto& y) { return x.v < y.v; });
  std::vector<Point> start = P.vertices, end(n);
  for (std::size_t i = 0; i < n; ++i) end[i] = P.vertices[P.next(i)];
  std::vector<std::vector<Edge>> cuts(n);
  std::vector<std::vector<Point>> cut_start(n);
  auto overlap = [](const std::string& label) {
    fail(ErrorCode::ChopsOverlap, "edge " + label + " has non-positive length");
  };
  for (auto& c : plan) {
    const std::size_t k = c.normals.size();
    if (c.eps.size() != k)
      fail(ErrorCode::Precondition, "expected " + std::to_string(k) + " truncation depths");
    const std::size_t v = c.v, before = P.prev(v);
    const Vec2& u = P.edges[before].normal;
    const Vec2& w = P.edges[v].normal;
    const Point& V = P.vertices[v];
    // fan[0] = u, fan[1..k] = cuts, fan[k+1] = w; consecutive pairs unimodular.
    std::vector<const Vec2*> fan{&u};
    for (const auto& x : c.normals) fan.push_back(&x);
    fan.push_back(&w);
    for (std::size_t j = 0; j + 1 < fan.size(); ++j)
      if (det(*fan[j], *fan[j + 1]) != 1) fail(ErrorCode::Precondition, "cut normals do not resolve the corner");
    std::vector<Rational> delta(k + 2, Rational(0));
    Rational t = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational& e = c.eps[j - 1];
      if (sgn(e) <= 0) fail(ErrorCode::ChopsOverlap, "truncation depth must be positive");
      Int dw = det(*fan[j], w);
      delta[j] = t * dw + e;
      t += e / dw;
    }
    auto& cs = cuts[v];
    auto& st = cut_start[v];
    cs.reserve(k);
    st.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
      const Vec2& a = *fan[j - 1];
      const Vec2& x = *fan[j];
      Edge& cut = cs.emplace_back();
      cut.normal = x;
      cut.dir = direction_of(x);
      cut.level = dot(x, V) + delta[j];
      cut.label = P.vertex_labels[v] + std::to_string(j);
      Int b = det(a, *fan[j + 1]);
      cut.length = Rational(b) * delta[j] - delta[j - 1] - delta[j + 1];
      if (sgn(cut.length) <= 0) overlap(cut.label);
      // Intersection of the lines through a and x, relative to V (det(a, x) = 1).
      st.push_back(Point{V.x + delta[j - 1] * x.y - delta[j] * a.y, V.y + delta[j] * a.x - delta[j - 1] * x.x});
    }
    end[before] = st[0];
    start[v] = Point{V.x + t * w.y, V.y - t * w.x};
  }

  LatticePolygon Q;
  std::size_t total = n;
  for (const auto& c : cuts) total += c.size();
  Q.edges.reserve(total);
  Q.vertices.reserve(total);
  Q.vertex_labels.reserve(total);
  std::vector<std::size_t> first(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = Q.edges.size();
    for (std::size_t j = 0; j < cuts[i].size(); ++j) {
      Q.edges.push_back(std::move(cuts[i][j]));
      Q.vertices.push_back(std::move(cut_start[i][j]));
      Q.vertex_labels.emplace_back();
    }
    Edge e = P.edges[i];
    e.length = length_along(start[i], end[i], e.dir);
    if (sgn(e.length) <= 0) overlap(e.label);
    Q.edges.push_back(std::move(e));
    Q.vertices.push_back(std::move(start[i]));
    Q.vertex_labels.push_back(cuts[i].empty() ? P.vertex_labels[i] : std::string());
  }
  std::vector<std::size_t> out;
  for (const auto& c : plan) out.push_back(first[c.v]);
  return {std::move(Q), std::move(out)};
}

ChopResult insert_cuts(const LatticePolygon& P, std::size_t v, std::vector<Vec2> normals, std::vector<Rational> eps) {
  ChopResult res;
  res.count = normals.size();
  auto [Q, first] = cut_corners(P, {CornerCut{v, std::move(normals), std::move(eps)}});
  res.polygon = std::move(Q);
  res.first_edge = first[0];
  return res;
}

}  // namespace

ChopResult chop_corner(const LatticePolygon& P, std::size_t v, const std::vector<Rational>& eps) {
  auto normals = resolving_normals(P, v);
  if (normals.empty()) fail(ErrorCode::Precondition, "corner is already Delzant");
  return insert_cuts(P, v, normals, eps);
}

ChopResult blowup_corner(const LatticePolygon& P, std::size_t v, const Rational& eps) {
  if (v >= P.size()) fail(ErrorCode::BadIndex, "vertex index out of range");
  const auto& u = P.edges[P.prev(v)].normal;
  const auto& w = P.edges[v].normal;
  if (det(u, w) != 1) fail(ErrorCode::Precondition, "corner is not Delzant");
  return insert_cuts(P, v, {Vec2{u.x + w.x, u.y + w.y}}, {eps});
}

EpsSchedule EpsSchedule::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("expected first:ratio");
  EpsSchedule s{parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  if (sgn(s.first) <= 0 || sgn(s.ratio) <= 0 || s.ratio >= 1)
    throw std::invalid_argument("need first > 0 and 0 < ratio < 1");
  return s;
}

EpsSchedule EpsSchedule::from_env() {
  const char* v = std::getenv("WPP_EPS_SCHEDULE");
  if (v == nullptr || *v == '\0') return {};
  return parse(v);
}

std::vector<Rational> EpsSchedule::depths(const Rational& shortest, std::size_t k) const {
  std::vector<Rational> out;
  Rational e = shortest * first;
  for (std::size_t j = 0; j < k; ++j) {
    out.push_back(e);
    e *= ratio;
  }
  return out;
}

std::string EpsSchedule::to_string() const { return wpp::to_string(first) + ":" + wpp::to_string(ratio); }

LatticePolygon resolve_corners(const LatticePolygon& P, const EpsSchedule& sched) {
  std::vector<CornerCut> plan;
  for (std::size_t v = 0; v < P.size(); ++v) {
    auto normals = resolving_normals(P, v);
    if (normals.empty()) continue;
    auto eps = sched.depths(std::min(P.edges[P.prev(v)].length, P.edges[v].length), normals.size());
    plan.push_back({v, std::move(normals), std::move(eps)});
  }
  auto Q = cut_corners(P, std::move(plan)).first;
  if (!Q.is_delzant()) fail(ErrorCode::LemmaViolated, "resolved polygon is not Delzant");
  return Q;
}

std::int64_t edge_selfint(const LatticePolygon& P, std::size_t i) {
  if (i >= P.size()) fail(ErrorCode::BadIndex, "edge index out of range");
  const auto& a = P.edges[P.prev(i)].normal;
  const auto& n = P.edges[i].normal;
  const auto& b = P.edges[P.next(i)].normal;
  if (det(a, n) != 1 || det(n, b) != 1)
    fail(ErrorCode::NotDelzantNeighborhood, "edge " + std::to_string(i) + " has a non-Delzant end");
  Vec2 sum{a.x + b.x, a.y + b.y};
  // sum = -s n, so det(a, sum) = -s det(a, n) = -s.
  Int s = -det(a, sum);
  if (!(sum.x == -s * n.x && sum.y == -s * n.y)) fail(ErrorCode::LemmaViolated, "normal fan relation fails");
  return to_i64(s);
}

namespace {

// Sparse class in a diagonal-or-Hirzebruch basis; coefficients stay small.
using Sparse = std::map<std::size_t, long>;

long sparse_pair(const Sparse& x, const Sparse& y, bool hirz, long k) {
  long s = 0;
  for (auto [i, xi] : x) {
    auto it = y.find(i);
    if (hirz && i < 2) {
      // Gram [[0,1],[1,-k]] on (f, s).
      auto other = y.find(1 - i);
      if (other != y.end()) s += xi * other->second;
      if (i == 1 && it != y.end()) s += -k * xi * it->second;
      continue;
    }
    if (it == y.end()) continue;
    long g = (i == 0 && !hirz) ? 1 : -1;
    s += g * xi * it->second;
  }
  return s;
}

}  // namespace

ClassAssignment assign_classes(const LatticePolygon& P) {
  const std::size_t m = P.size();
  if (!P.is_delzant()) fail(ErrorCode::Precondition, "assign_classes needs a Delzant polygon");
  std::vector<long> self(m);
  for (std::size_t i = 0; i < m; ++i) self[i] = edge_selfint(P, i);

  // Contract -1 edges; alive keeps original indices in cyclic order.
  std::vector<std::size_t> alive(m);
  for (std::size_t i = 0; i < m; ++i) alive[i] = i;
  struct Step {
    std::size_t edge, left, right;
  };
  std::vector<Step> steps;
  auto cur = self;
  while (true) {
    std::size_t n = alive.size();
    std::size_t pick = n;
    for (std::size_t t = 0; t < n; ++t)
      if (cur[alive[t]] == -1) {
        pick = t;
        break;
      }
    if (n == 3) break;
    if (pick == n) {
      if (n == 4) break;
      fail(ErrorCode::NoMinusOneEdge, "no -1 edge on a polygon with " + std::to_string(n) + " edges");
    }
    std::size_t l = alive[(pick + n - 1) % n], r = alive[(pick + 1) % n];
    steps.push_back({alive[pick], l, r});
    cur[l] += 1;
    cur[r] += 1;
    alive.erase(alive.begin() + pick);
  }

  std::vector<Sparse> cls(m);
  bool hirz = alive.size() == 4;
  long k = 0;
  if (!hirz) {
    for (auto i : alive)
      if (cur[i] != 1) fail(ErrorCode::LemmaViolated, "terminal triangle is not CP^2");
    for (auto i : alive) cls[i] = {{0, 1}};
  } else {
    // Self-intersections (-k, 0, k, 0) cyclically from the -k edge.
    std::size_t start = 0;
    for (std::size_t t = 0; t < 4; ++t)
      if (cur[alive[t]] < 0) start = t;
    k = -cur[alive[start]];
    std::array<long, 4> expect{-k, 0, k, 0};
    for (std::size_t t = 0; t < 4; ++t)
      if (cur[alive[(start + t) % 4]] != expect[t]) fail(ErrorCode::LemmaViolated, "terminal quadrilateral is not Hirzebruch");
    cls[alive[start]] = {{1, 1}};
    cls[alive[(start + 1) % 4]] = {{0, 1}};
    cls[alive[(start + 2) % 4]] = k == 0 ? Sparse{{1, 1}} : Sparse{{0, k}, {1, 1}};
    cls[alive[(start + 3) % 4]] = {{0, 1}};
  }

  ClassAssignment out;
  const std::size_t base_rank = hirz ? 2 : 1;
  const std::size_t rank = base_rank + steps.size();
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const auto& st = steps[steps.size() - 1 - t];
    std::size_t e = base_rank + t;
    cls[st.edge] = {{e, 1}};
    for (auto nb : {st.left, st.right}) cls[nb][e] -= 1;
  }
  for (const auto& st : steps) out.contracted.push_back(st.edge);
  Lattice L = hirz ? Lattice::hirzebruch(k, steps.size()) : Lattice::projective_plane(steps.size());

  // Exact consistency: pairings reproduce the cycle, -K is the sum of edges.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      long expect = i == j ? self[i] : (j == i + 1 || (i == 0 && j == m - 1)) ? 1 : 0;
      if (m == 3 && i != j) expect = 1;
      if (sparse_pair(cls[i], cls[j], hirz, k) != expect)
        fail(ErrorCode::LemmaViolated, "assigned classes do not reproduce the edge cycle");
    }
  std::vector<long> minusK(rank, 0);
  for (const auto& c : cls)
    for (auto [idx, v] : c) minusK[idx] += v;
  for (std::size_t i = 0; i < rank; ++i)
    if (-L.K()[i] != minusK[i]) fail(ErrorCode::LemmaViolated, "edge classes do not sum to -K");

  // [omega] = -sum level_i D_i; values are its pairings with the basis.
  std::vector<Rational> omega(rank);
  for (std::size_t i = 0; i < m; ++i)
    for (auto [c, v] : cls[i]) omega[c] -= P.edges[i].level * v;
  auto& val = out.area.values;
  val.resize(rank);
  for (std::size_t b = base_rank; b < rank; ++b) val[b] = -omega[b];
  if (hirz) {
    val[0] = omega[1];
    val[1] = omega[0] - Rational(k) * omega[1];
  } else {
    val[0] = omega[0];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational a = 0;
    for (auto [c, v] : cls[i]) a += Rational(v) * val[c];
    if (a != P.edges[i].length) fail(ErrorCode::LemmaViolated, "area functional disagrees with an edge length");
  }

  for (std::size_t i = 0; i < m; ++i) {
    HClass h(rank);
    for (auto [c, v] : cls[i]) h[c] = v;
    out.edge_classes.push_back(std::move(h));
  }
  out.selfints.assign(self.begin(), self.end());
  out.lattice = std::move(L);
  return out;
}

std::optional<ClassAssignment> to_projective_basis(const ClassAssignment& ca) {
  const auto& L = ca.lattice;
  if (L.tag() == homlat::BasisTag::ProjectivePlane) return ca;
  if (L.tag() != homlat::BasisTag::Hirzebruch) return std::nullopt;
  const long k = L.hirzebruch_k(), j = k / 2;
  const std::size_t r = L.rank();
  const bool odd = k % 2 == 1;
  if (!odd && r < 3) return std::nullopt;
  ClassAssignment out;
  out.lattice = homlat::Lattice::projective_plane(r - 1);
  out.selfints = ca.selfints;
  out.contracted = ca.contracted;
  // Old basis (f, s, e_1, ...) in terms of (H, E_1, E_2, ...):
  //   odd k:  f = H - E1, s = -jH + (j+1)E1, e_i = E_{i+1}
  //   even k: f = H - E1, s = (1-j)H + jE1 - E2, e_1 = H - E1 - E2, e_i = E_{i+1}
  for (const auto& x : ca.edge_classes) {
    HClass y = x;
    const Int &xf = x[0], &xs = x[1];
    if (odd) {
      y[0] = xf - j * xs;
      y[1] = -xf + (j + 1) * xs;
    } else {
      const Int& xe = x[2];
      y[0] = xf + (1 - j) * xs + xe;
      y[1] = -xf + j * xs - xe;
      y[2] = -xs - xe;
    }
    out.edge_classes.push_back(std::move(y));
  }
  // New basis in terms of the old one:
  //   odd k:  H = s + (j+1)f, E1 = s + jf
  //   even k: H = s + (j+1)f - e1, E1 = s + jf - e1, E2 = f - e1
  const auto& a = ca.area.values;
  auto& b = out.area.values;
  b = a;
  if (odd) {
    b[0] = a[1] + Rational(j + 1) * a[0];
    b[1] = a[1] + Rational(j) * a[0];
  } else {
    b[0] = a[1] + Rational(j + 1) * a[0] - a[2];
    b[1] = a[1] + Rational(j) * a[0] - a[2];
    b[2] = a[0] - a[2];
  }
  return out;
}

}  // namespace wpp::polygon
