#include "wpp/error.hpp"
#include "wpp/rulings.hpp"

#include <doctest.h>

#include <numeric>

using namespace wpp;
using namespace wpp::rulings;
using strings::SelfInts;

namespace {
resolution::ResolutionPair build(long a, long b, long c, int p = 1) {
  return resolution::build_resolution(arith::make_weight_triple(a, b, c), p);
}
std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("combined strings of CP(11,13,14)") {
  auto R = build(11, 13, 14);
  auto [sac, sbc] = combined_strings(R);
  CHECK(sac.string.selfints == SelfInts{-2, -3, -2, -2, -1, -3, -5});
  CHECK(sbc.string.selfints == SelfInts{-3, -2, -2, -2, -2, -2, -1, -5, -3});
  CHECK(sac.labels[4] == "N_b");
  CHECK(sbc.labels.back() == "C1");
  CHECK(sbc.target_index.back() == 1);
}

TEST_CASE("combined strings of CP(2,3,5)") {
  auto [sac, sbc] = combined_strings(build(2, 3, 5));
  CHECK(sac.string.selfints == SelfInts{-2, -1, -2, -2, -2, -2});
  CHECK(sbc.string.selfints == SelfInts{-3, -1, -2, -2, -2, -2});
}

TEST_CASE("ruling of CP(11,13,14)") {
  auto R = build(11, 13, 14);
  auto nu = nu_indices(R);
  CHECK(nu.nu_a == 1);
  CHECK(nu.nu_b == 2);
  CHECK(nu.deltas_a.deltas == ints({1, 2, 5, 8, 11, 3, -2}));
  CHECK(nu.deltas_b.deltas == ints({1, 3, 5, 7, 9, 11, 13, 2, -3}));
  auto rd = ruling(R);
  CHECK(rd.kind == RulingCase::Unicuspidal);
  CHECK(rd.pa == 2);
  CHECK(rd.qa == 3);
  CHECK(rd.pb == 3);
  CHECK(rd.qb == 2);
  REQUIRE(rd.cusp_location);
  CHECK(R.strings[2].selfints[rd.cusp_location->first - 1] == -3);
  CHECK(R.strings[2].selfints[rd.cusp_location->second - 1] == -5);
  CHECK(rd.selfint == 6);
  CHECK(rd.k_dot == -6);

  auto res = ruling_resolution(R, rd);
  CHECK(res.blowups == 3);
  CHECK(res.fiber.weights.m == ints({2, 1, 1}));
  CHECK(res.square == 0);
  CHECK(res.k_dot == -2);
}

TEST_CASE("ruling of CP(2,3,5) is an embedded fiber") {
  auto R = build(2, 3, 5);
  auto rd = ruling(R);
  CHECK(rd.kind == RulingCase::EmbeddedFiber);
  CHECK(rd.nu_b - rd.nu_a == 2);
  CHECK(rd.selfint == 0);
  REQUIRE(rd.meet_component);
  int ones = 0;
  for (const auto& [label, v] : rd.profile) {
    CHECK(v >= 0);
    if (label[0] == 'C' && v == 1) {
      ++ones;
      CHECK(label == "C" + std::to_string(*rd.meet_component));
    }
  }
  CHECK(ones == 1);
  CHECK_THROWS_AS(ruling_resolution(R, rd), Error);
}

TEST_CASE("all-negative-definite input has no sign change") {
  auto R = build(2, 3, 5);
  for (auto& s : R.strings)
    for (auto& x : s.selfints) x = -6;
  R.connectors[0].selfint = R.connectors[1].selfint = -6;
  try {
    nu_indices(R);
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
}

TEST_CASE("ruling invariants over small triples") {
  int uni = 0, emb = 0;
  for (long a = 2; a <= 9; ++a)
    for (long b = a + 1; b <= 11; ++b)
      for (long c = b + 1; c <= 15; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        for (int p = 1; p <= 6; ++p) {
          auto R = build(a, b, c, p);
          auto rd = ruling(R);
          CHECK((rd.nu_b - rd.nu_a == 1 || rd.nu_b - rd.nu_a == 2));
          if (rd.kind == RulingCase::Unicuspidal) {
            ++uni;
            auto res = ruling_resolution(R, rd);
            CHECK(res.square == 0);
            CHECK(res.k_dot == -2);
          } else {
            ++emb;
          }
        }
      }
  CHECK(uni > 0);
  CHECK(emb > 0);
}
