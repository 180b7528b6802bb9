#include "wpp/error.hpp"
#include "wpp/homlat.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace wpp;
using namespace wpp::homlat;

namespace {

AreaForm cp2_area(std::vector<Rational> v) { return AreaForm{std::move(v)}; }

// Every integer vector with |coordinate| <= B, tested directly.
std::vector<HClass> brute_force(const Lattice& L, const AreaForm& area, long B,
                                const std::vector<PairingConstraint>& cons) {
  std::vector<HClass> out;
  HClass x(L.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == L.rank()) {
      if (L.square(x) != -1 || L.k_dot(x) != -1 || area(x) <= 0) return;
      for (const auto& c : cons)
        if (L.pair(x, c.with) < c.at_least) return;
      out.push_back(x);
      return;
    }
    for (long v = -B; v <= B; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

AreaForm random_area(std::mt19937_64& rng, std::size_t n) {
  // A reduced-looking form: large H area, small distinct exceptional areas.
  std::uniform_int_distribution<long> small(1, 30);
  AreaForm a;
  a.values.push_back(Rational(200 + small(rng), 7));
  for (std::size_t i = 0; i < n; ++i) a.values.push_back(Rational(small(rng), 3 + (long)i));
  return a;
}

}  // namespace

TEST_CASE("pairing examples") {
  auto L = Lattice::projective_plane(2);
  HClass H{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
  CHECK(pair(L, H - e1, H - e2) == 1);
  CHECK(pair(L, e1, e1) == -1);
  auto L6 = Lattice::projective_plane(6);
  CHECK(L6.square(L6.K()) == 3);
  CHECK_THROWS_AS(pair(L, H, HClass{1, 0}), Error);
}

TEST_CASE("pairing with large coefficients") {
  auto L = Lattice::projective_plane(2);
  const Int big("100000000000000000000");
  HClass a{1, 0, 0}, b{1, 0, 0};
  a[0] = big;
  b[0] = big;
  a[1] = 3;
  b[1] = Int(1L << 40);
  CHECK(pair(L, a, b) == big * big - 3 * Int(1L << 40));
  HClass c{0, 1L << 40, 0};
  CHECK(pair(L, c, c) == -Int(1L << 40) * Int(1L << 40));
}

TEST_CASE("adjunction and SW index") {
  auto L = Lattice::projective_plane(3);
  HClass H{1, 0, 0, 0}, e1{0, 1, 0, 0};
  CHECK(adjunction_defect(L, H) == 0);
  CHECK(adjunction_defect(L, e1) == 0);
  CHECK(adjunction_defect(L, 2 * H) == 0);
  CHECK(sw_index(L, e1) == 0);  // K.e1 = -1
  CHECK(sw_index(L, H) == 4);
  CHECK(sw_index(L, H - e1) == 2);  // fiber class
}

TEST_CASE("inertia and K^2") {
  for (std::size_t n = 0; n <= 12; ++n) {
    auto L = Lattice::projective_plane(n);
    CHECK(inertia(L) == Inertia{1, n, 0});
    CHECK(L.square(L.K()) + static_cast<long>(L.rank()) == 10);
  }
  for (long k = 0; k <= 6; ++k) {
    auto L = Lattice::hirzebruch(k, 3);
    CHECK(inertia(L) == Inertia{1, 4, 0});
    CHECK(L.square(L.K()) == 8 - 3);
  }
  CHECK(inertia(IntMatrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
  CHECK(inertia(IntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(determinant(IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
}

TEST_CASE("Hirzebruch charts are isometries carrying K to K") {
  for (long k = 0; k <= 7; ++k)
    for (std::size_t m = 0; m <= 3; ++m) {
      auto L = Lattice::hirzebruch(k, m);
      auto ch = projective_chart(L);
      if (k % 2 == 0 && m == 0) {
        CHECK(!ch);
        continue;
      }
      REQUIRE(ch);
      for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) {
          auto bi = HClass::unit(L.rank(), i), bj = HClass::unit(L.rank(), j);
          CHECK(ch->target.pair(ch->to_target(bi), ch->to_target(bj)) == L.pair(bi, bj));
        }
      CHECK(ch->to_target(L.K()) == ch->target.K());
      CHECK(ch->from_target(ch->to_target(L.K())) == L.K());
    }
}

TEST_CASE("blowup then blowdown is the identity") {
  auto L = Lattice::projective_plane(3);
  auto up = L.blown_up();
  auto e = HClass::unit(up.rank(), up.rank() - 1);
  auto bd = blow_down(up, e);
  CHECK(bd.lattice == L);
  HClass x{2, -1, 0, 1, 0};
  CHECK(bd.project(up, e, x) == HClass{2, -1, 0, 1});

  // Contracting H - e1 - e2 in CP^2#2 yields an even unimodular rank-2 lattice.
  auto L2 = Lattice::projective_plane(2);
  auto c = blow_down(L2, HClass{1, -1, -1});
  CHECK(c.lattice.rank() == 2);
  CHECK(inertia(c.lattice) == Inertia{1, 1, 0});
  CHECK(determinant(c.lattice.gram()) == -1);
  CHECK(c.lattice.square(c.lattice.K()) == 8);

  CHECK_THROWS_AS(blow_down(L2, HClass{1, 0, 0}), Error);
}

TEST_CASE("enumeration examples") {
  ExceptionalOptions opt;
  opt.coeff_bound = 3;
  auto L2 = Lattice::projective_plane(2);
  auto s = enumerate_exceptional(L2, cp2_area({10, 3, 2}), opt);
  CHECK(s.classes == std::vector<HClass>{HClass{0, 0, 1}, HClass{0, 1, 0}, HClass{1, -1, -1}});
  CHECK(!s.possibly_incomplete);

  auto L1 = Lattice::projective_plane(1);
  CHECK(enumerate_exceptional(L1, cp2_area({10, 3}), opt).classes == std::vector<HClass>{HClass{0, 1}});
  CHECK(enumerate_exceptional(Lattice::projective_plane(0), cp2_area({1}), opt).classes.empty());

  // Area cap keeps only e2 (area 2).
  opt.area_cap = Rational(2);
  CHECK(enumerate_exceptional(L2, cp2_area({10, 3, 2}), opt).classes == std::vector<HClass>{HClass{0, 0, 1}});
}

TEST_CASE("enumeration matches brute force") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int t = 0; t < 3; ++t) {
      auto L = Lattice::projective_plane(n);
      auto area = random_area(rng, n);
      ExceptionalOptions opt;
      opt.coeff_bound = 3;
      opt.filter = ExceptionalFilter::Lattice;
      std::vector<PairingConstraint> cons;
      if (t == 2) cons.push_back({HClass::unit(n + 1, 1), 0});
      auto got = enumerate_exceptional(L, area, opt, cons);
      CHECK(got.classes == brute_force(L, area, 3, cons));
    }
}

TEST_CASE("serial and parallel enumeration agree; Cremona filter is inert for n <= 8") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 3; n <= 8; ++n) {
    auto area = random_area(rng, n);
    ExceptionalOptions opt;
    opt.coeff_bound = 4;
    opt.filter = ExceptionalFilter::Lattice;
    auto a = detail::enumerate_cp2_serial(n, area, opt, {});
    auto b = detail::enumerate_cp2_parallel(n, area, opt, {});
    CHECK(a == b);
    opt.filter = ExceptionalFilter::Cremona;
    CHECK(detail::enumerate_cp2_serial(n, area, opt, {}) == a);
    for (const auto& e : a.classes) CHECK(in_cremona_orbit(e));
  }
}

TEST_CASE("orbit enumeration matches the filtered lattice search") {
  std::mt19937_64 rng(23);
  std::size_t found = 0;
  for (std::size_t n = 1; n <= 11; ++n) {
    auto area = random_area(rng, n);
    ExceptionalOptions opt;
    opt.coeff_bound = n <= 8 ? 5 : 4;
    std::vector<PairingConstraint> cons;
    if (n >= 4) {
      HClass x(n + 1);
      x[0] = 1;
      x[1] = x[2] = -1;
      cons.push_back({x, 0});
      cons.push_back({HClass::unit(n + 1, n), 0});
    }
    auto ref = detail::enumerate_cp2_search(n, area, opt, cons);
    CHECK(detail::enumerate_cp2_serial(n, area, opt, cons) == ref);
    CHECK(detail::enumerate_cp2_parallel(n, area, opt, cons) == ref);
    found += ref.classes.size();
  }
  CHECK(found > 100);
}

TEST_CASE("several pairing constraints match filtering afterwards") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::size_t kept = 0;
  for (std::size_t n = 5; n <= 10; ++n)
    for (int t = 0; t < 4; ++t) {
      auto L = Lattice::projective_plane(n);
      auto area = random_area(rng, n);
      ExceptionalOptions opt;
      opt.coeff_bound = 5;
      std::vector<PairingConstraint> cons;
      for (int k = 0; k < 3; ++k) {
        HClass x(n + 1);
        for (std::size_t i = 0; i <= n; ++i) x[i] = coef(rng);
        cons.push_back({x, k < t ? 1 : 0});
      }
      auto all = enumerate_exceptional(L, area, opt, {});
      std::vector<HClass> want;
      for (const auto& e : all.classes) {
        bool ok = true;
        for (const auto& c : cons) ok = ok && pair(L, e, c.with) >= c.at_least;
        if (ok) want.push_back(e);
      }
      auto got = enumerate_exceptional(L, area, opt, cons);
      CHECK(got.classes == want);
      kept += want.size();
    }
  CHECK(kept > 50);
}

TEST_CASE("Cremona orbit membership") {
  CHECK(in_cremona_orbit(HClass{0, 1, 0}));
  CHECK(in_cremona_orbit(HClass{1, -1, -1}));
  CHECK(in_cremona_orbit(HClass{2, -1, -1, -1, -1, -1}));
  CHECK(in_cremona_orbit(HClass{3, -2, -1, -1, -1, -1, -1, -1}));
  // 3H - E1 - ... - E9 + E10 squares to -1 and pairs -1 with K, yet is not exceptional.
  HClass bad(11);
  bad[0] = 3;
  for (int i = 1; i <= 9; ++i) bad[i] = -1;
  bad[10] = 1;
  auto L = Lattice::projective_plane(10);
  CHECK(L.square(bad) == -1);
  CHECK(L.k_dot(bad) == -1);
  CHECK(!in_cremona_orbit(bad));
  CHECK(!in_cremona_orbit(HClass{0, -1, 0}));
}

TEST_CASE("log filters via constraints equal filtering the plain enumeration") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto L = Lattice::projective_plane(n);
    auto area = random_area(rng, n);
    ExceptionalOptions opt;
    opt.coeff_bound = 4;
    ComponentClasses D;
    D.push_back({HClass::unit(n + 1, 1)});
    D.push_back({HClass::unit(n + 1, 0) - HClass::unit(n + 1, 1) - HClass::unit(n + 1, 2)});
    auto all = enumerate_exceptional(L, area, opt);
    auto logs = log_exceptional(L, area, D, opt);
    auto conn = connecting_log_exceptional(L, area, D, 0, 1, opt);
    std::vector<HClass> want_log, want_conn;
    for (const auto& e : all.classes) {
      Int p0 = L.pair(e, D[0][0]), p1 = L.pair(e, D[1][0]);
      if (p0 >= 0 && p1 >= 0) want_log.push_back(e);
      if (p0 >= 1 && p1 >= 1) want_conn.push_back(e);
    }
    CHECK(logs.classes == want_log);
    CHECK(conn.classes == want_conn);
  }
}

TEST_CASE("log exceptional examples") {
  auto L = Lattice::projective_plane(1);
  AreaForm a{{10, 3}};
  ExceptionalOptions opt;
  CHECK(log_exceptional(L, a, {}, opt).classes == std::vector<HClass>{HClass{0, 1}});
  CHECK(log_exceptional(L, a, {{HClass{0, 1}}}, opt).classes.empty());
  CHECK_THROWS_AS(exceptional_gap(L, a, {{HClass{0, 1}}, {HClass{1, 0}}}, 1, 1, opt), Error);
  auto g = exceptional_gap(L, a, {{HClass{1, -1}}, {HClass{1, 0}}}, 0, 1, opt);
  CHECK(g.value == 0);
}

TEST_CASE("log Kodaira classifier") {
  CHECK(log_kodaira(-1, 5) == Kodaira::MinusInfinity);
  CHECK(log_kodaira(3, -1) == Kodaira::MinusInfinity);
  CHECK(log_kodaira(0, 0) == Kodaira::Zero);
  CHECK(log_kodaira(1, 0) == Kodaira::One);
  CHECK(log_kodaira(2, 3) == Kodaira::Two);
  CHECK(log_kodaira(0, -4) == Kodaira::MinusInfinity);
  CHECK_THROWS_AS(log_kodaira(0, 2), Error);
  for (int s = -5; s <= 5; ++s) CHECK(log_kodaira(Rational(-1, 3), s) == Kodaira::MinusInfinity);
}
