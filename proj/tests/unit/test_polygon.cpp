#include "wpp/error.hpp"
#include "wpp/polygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace wpp;
using namespace wpp::polygon;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

std::set<std::pair<std::string, std::string>> vertex_set(const LatticePolygon& T) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& v : T.vertices) s.insert({to_string(v.x), to_string(v.y)});
  return s;
}

std::vector<std::int64_t> selfints_with_prefix(const LatticePolygon& Q, char prefix) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < Q.size(); ++i)
    if (Q.edges[i].label[0] == prefix) out.push_back(edge_selfint(Q, i));
  return out;
}

LatticePolygon cp2() { return LatticePolygon::from_vertices({P(0, 0), P(1, 0), P(0, 1)}, {"O", "X", "Y"}, {}); }

}  // namespace

TEST_CASE("six presentations of CP(2,3,5)") {
  auto w = arith::make_weight_triple(2, 3, 5);
  auto T = six_presentations(w);
  using S = std::set<std::pair<std::string, std::string>>;
  CHECK(vertex_set(T[0]) == S{{"0", "0"}, {"0", "5"}, {"6", "3"}});
  CHECK(vertex_set(T[3]) == S{{"0", "0"}, {"0", "2"}, {"15", "5"}});
  for (const auto& t : T) {
    CHECK(t.twice_area() == T[0].twice_area());
    CHECK(sgn(t.twice_area()) > 0);
    CHECK(t.find_vertex("A"));
    // N_x is opposite X: neither endpoint of N_a is A.
    auto na = *t.find_edge("N_a");
    CHECK(t.vertex_labels[na] != "A");
    CHECK(t.vertex_labels[t.next(na)] != "A");
  }
}

TEST_CASE("equal areas for many triples") {
  for (long a = 2; a <= 12; ++a)
    for (long b = a + 1; b <= 13; ++b)
      for (long c = b + 1; c <= 14; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        auto T = six_presentations(arith::make_weight_triple(a, b, c));
        for (const auto& t : T) CHECK(t.twice_area() == Rational(a * b * c));
      }
}

TEST_CASE("corner types") {
  auto T1 = six_presentations(arith::make_weight_triple(2, 3, 5))[0];
  CHECK(corner_type(T1, *T1.find_vertex("A")) == CornerType{2, 1});
  CHECK(corner_type(T1, *T1.find_vertex("B")) == CornerType{3, 1});
  CHECK(corner_type(T1, *T1.find_vertex("C")) == CornerType{5, 4});
  CHECK(corner_type(cp2(), 0) == CornerType{1, 0});
  CHECK_THROWS_AS(chop_corner(cp2(), 0, {Rational(1, 4)}), Error);

  // Reading from the other side gives the dual residue.
  auto w = arith::make_weight_triple(5, 7, 11);
  auto T = six_presentations(w)[0];
  auto ct = corner_type(T, *T.find_vertex("C"));
  auto rev = corner_type(T, *T.find_vertex("C"), true);
  CHECK(rev.r == ct.r);
  CHECK(mod_pos(rev.q * ct.q, ct.r) == 1);
}

TEST_CASE("one chop of an O_{c,1} corner gives the -c section") {
  for (long c = 2; c <= 6; ++c) {
    auto T = LatticePolygon::from_vertices({P(0, 0), P(c, 0), P(0, 1)}, {"O", "X", "Y"}, {"b", "h", "v"});
    std::size_t y = *T.find_vertex("Y");
    CHECK(corner_type(T, y).r == c);
    auto r = chop_corner(T, y, {Rational(1, 2)});
    CHECK(r.count == 1);
    CHECK(r.polygon.size() == 4);
    CHECK(edge_selfint(r.polygon, r.first_edge) == -c);
    CHECK(r.polygon.is_delzant());
  }
}

TEST_CASE("resolving T1 of CP(2,3,5)") {
  auto T1 = six_presentations(arith::make_weight_triple(2, 3, 5))[0];
  auto Q = resolve_corners(T1);
  CHECK(Q.size() == 9);
  CHECK(Q.is_delzant());
  CHECK(selfints_with_prefix(Q, 'A') == std::vector<std::int64_t>{-2});
  CHECK(selfints_with_prefix(Q, 'B') == std::vector<std::int64_t>{-3});
  CHECK(selfints_with_prefix(Q, 'C') == std::vector<std::int64_t>{-2, -2, -2, -2});
  CHECK_THROWS_AS(edge_selfint(T1, 0), Error);

  auto ca = assign_classes(Q);
  CHECK(ca.lattice.rank() == Q.size() - 2);
  CHECK(ca.lattice.square(ca.lattice.K()) == 3);
  for (std::size_t i = 0; i < Q.size(); ++i) CHECK(ca.area(ca.edge_classes[i]) == Q.edges[i].length);
}

TEST_CASE("truncation depths that do not nest") {
  auto T1 = six_presentations(arith::make_weight_triple(2, 3, 5))[0];
  std::size_t c = *T1.find_vertex("C");
  CHECK_THROWS_AS(chop_corner(T1, c, {Rational(100), Rational(1), Rational(1), Rational(1)}), Error);
  CHECK_THROWS_AS(chop_corner(T1, c, {Rational(1)}), Error);
  try {
    resolve_corners(T1, EpsSchedule{Rational(3), Rational(1, 2)});
    FAIL("expected ChopsOverlap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChopsOverlap);
  }
}

TEST_CASE("eps schedule parsing") {
  auto s = EpsSchedule::parse("1/5:1/2");
  CHECK(s.first == Rational(1, 5));
  CHECK(s.depths(Rational(10), 3) == std::vector<Rational>{2, 1, Rational(1, 2)});
  CHECK(EpsSchedule{}.to_string() == "1/4:1/3");
  CHECK_THROWS(EpsSchedule::parse("1/4"));
  CHECK_THROWS(EpsSchedule::parse("1/4:2"));
}

TEST_CASE("edge self-intersections of CP^2") {
  auto T = cp2();
  for (std::size_t i = 0; i < 3; ++i) CHECK(edge_selfint(T, i) == 1);
  auto ca = assign_classes(T);
  for (const auto& h : ca.edge_classes) CHECK(h == homlat::HClass{1});
  CHECK(ca.area.values == std::vector<Rational>{1});
}

TEST_CASE("one corner chop of CP^2") {
  auto r = blowup_corner(cp2(), 0, Rational(1, 3));
  auto ca = assign_classes(r.polygon);
  using homlat::HClass;
  std::multiset<HClass> got(ca.edge_classes.begin(), ca.edge_classes.end());
  CHECK(got == std::multiset<HClass>{HClass{1, -1}, HClass{0, 1}, HClass{1, -1}, HClass{1, 0}});
  CHECK(ca.lattice.K() == HClass{-3, 1});
  CHECK(ca.edge_classes[r.first_edge] == HClass{0, 1});
}

TEST_CASE("Hirzebruch terminal models") {
  for (long k = 0; k <= 4; ++k) {
    if (k == 1) continue;
    auto T = LatticePolygon::from_vertices({P(0, 0), P(k + 2, 0), P(2, 1), P(0, 1)}, {}, {});
    auto ca = assign_classes(T);
    CHECK(ca.lattice.tag() == homlat::BasisTag::Hirzebruch);
    CHECK(ca.lattice.hirzebruch_k() == k);
    CHECK(ca.lattice.rank() == 2);
  }
}

TEST_CASE("pipelines over triples: edge count, rank, K^2, orientation of strings") {
  int checked = 0;
  for (long a = 2; a <= 13; ++a)
    for (long b = a + 1; b <= 17; ++b)
      for (long c = b + 1; c <= 19; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        auto w = arith::make_weight_triple(a, b, c);
        std::size_t total = 0;
        for (auto [r, q] : {std::pair{w.a, w.a_b}, {w.b, w.b_c}, {w.c, w.c_a}})
          total += arith::neg_cf_expand(r, q).entries.size();
        for (const auto& T : six_presentations(w)) {
          for (auto [lab, r, q] : {std::tuple{"A", w.a, w.a_b}, {"B", w.b, w.b_c}, {"C", w.c, w.c_a}}) {
            auto ct = corner_type(T, *T.find_vertex(lab));
            CHECK(ct.r == r);
            CHECK((ct.q == q || mod_pos(ct.q * q, r) == 1));
          }
          auto Q = resolve_corners(T);
          REQUIRE(Q.size() == 3 + total);
          auto ca = assign_classes(Q);
          CHECK(ca.lattice.rank() == Q.size() - 2);
          CHECK(ca.lattice.square(ca.lattice.K()) == Int(12 - long(Q.size())));
          for (const auto& h : ca.edge_classes) CHECK(sgn(ca.area(h)) > 0);
          ++checked;
        }
      }
  CHECK(checked > 500);
}

TEST_CASE("integral affine invariance") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 3), shift(-5, 5);
  auto base = resolve_corners(six_presentations(arith::make_weight_triple(3, 5, 7))[2]);
  auto ref = assign_classes(base);
  for (int trial = 0; trial < 20; ++trial) {
    long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (int s = 0; s < 6; ++s) {
      int g = pick(rng);
      long k = g < 2 ? 1 : -1;
      if (g % 2 == 0) {
        m00 += k * m10;
        m01 += k * m11;
      } else {
        m10 += k * m00;
        m11 += k * m01;
      }
    }
    Rational tx = make_rational(shift(rng), 3), ty = make_rational(shift(rng), 7);
    std::vector<Point> pts;
    for (const auto& v : base.vertices) pts.push_back({Rational(m00) * v.x + Rational(m01) * v.y + tx,
                                                       Rational(m10) * v.x + Rational(m11) * v.y + ty});
    std::vector<std::string> el;
    for (const auto& e : base.edges) el.push_back(e.label);
    auto moved = LatticePolygon::from_vertices(pts, base.vertex_labels, el);
    REQUIRE(moved.size() == base.size());
    auto ca = assign_classes(moved);
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(moved.edges[i].length == base.edges[i].length);
      CHECK(edge_selfint(moved, i) == edge_selfint(base, i));
      CHECK(ca.edge_classes[i] == ref.edge_classes[i]);
    }
    CHECK(ca.area.values == ref.area.values);
  }
}

TEST_CASE("closed-form projective basis agrees with the chart") {
  int hirz = 0;
  for (long a = 2; a <= 9; ++a)
    for (long b = a + 1; b <= 11; ++b)
      for (long c = b + 1; c <= 13; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        for (const auto& T : six_presentations(arith::make_weight_triple(a, b, c))) {
          auto ca = assign_classes(resolve_corners(T));
          auto pr = to_projective_basis(ca);
          REQUIRE(pr);
          auto chart = homlat::projective_chart(ca.lattice);
          REQUIRE(chart);
          CHECK(pr->lattice == chart->target);
          for (std::size_t i = 0; i < ca.edge_classes.size(); ++i)
            CHECK(pr->edge_classes[i] == chart->to_target(ca.edge_classes[i]));
          CHECK(pr->area.values == chart->area_to_target(ca.area).values);
          if (ca.lattice.tag() == homlat::BasisTag::Hirzebruch) ++hirz;
        }
      }
  CHECK(hirz > 0);
}
