#include "wpp/arith.hpp"
#include "wpp/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace wpp;
using namespace wpp::arith;

namespace {
std::vector<std::int64_t> v(std::initializer_list<std::int64_t> x) { return x; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Precondition;
}
}  // namespace

TEST_CASE("weight residues") {
  auto w = make_weight_triple(2, 3, 5);
  CHECK(w.a_b == 1);
  CHECK(w.a_c == 1);
  CHECK(w.b_a == 1);
  CHECK(w.b_c == 1);
  CHECK(w.c_a == 4);
  CHECK(w.c_b == 4);

  auto u = make_weight_triple(11, 13, 14);
  CHECK(u.a_b == 7);
  CHECK(u.b_c == 11);
  CHECK(u.c_a == 5);

  CHECK(code_of([] { make_weight_triple(2, 4, 5); }) == ErrorCode::NotPairwiseCoprime);
  CHECK(code_of([] { make_weight_triple(1, 1, 5); }) == ErrorCode::DegenerateWeight);
  CHECK(code_of([] { make_weight_triple(1, 2, 3); }) == ErrorCode::DegenerateWeight);
}

TEST_CASE("residue congruences and mutual inverses") {
  for (int a = 2; a <= 30; ++a)
    for (int b = 2; b <= 30; ++b)
      for (int c = 2; c <= 30; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        auto w = make_weight_triple(a, b, c);
        CHECK(mod_pos(w.a_b * b - c, a) == 0);
        CHECK(mod_pos(w.a_c * c - b, a) == 0);
        CHECK(mod_pos(w.b_a * a - c, b) == 0);
        CHECK(mod_pos(w.b_c * c - a, b) == 0);
        CHECK(mod_pos(w.c_a * a - b, c) == 0);
        CHECK(mod_pos(w.c_b * b - a, c) == 0);
        CHECK(mod_pos(w.a_b * w.a_c, a) == 1 % a);
        CHECK(mod_pos(w.b_a * w.b_c, b) == 1 % b);
        CHECK(mod_pos(w.c_a * w.c_b, c) == 1 % c);
      }
}

TEST_CASE("canonical order") {
  auto c = canonicalize(make_weight_triple(14, 11, 13));
  CHECK(c.sorted == make_weight_triple(11, 13, 14));
  CHECK(c.order == std::array<int, 3>{1, 2, 0});
}

TEST_CASE("negative continued fractions") {
  CHECK(neg_cf_expand(5, 4).entries == v({2, 2, 2, 2}));
  CHECK(neg_cf_expand(11, 7).entries == v({2, 3, 2, 2}));
  CHECK(neg_cf_expand(2, 1).entries == v({2}));
  CHECK(neg_cf_expand(7, 3).entries == v({3, 2, 2}));
  CHECK(neg_cf_value(v({2, 2, 3})) == Rational(7, 5));
  CHECK(code_of([] { neg_cf_expand(4, 2); }) == ErrorCode::InvalidFraction);
  CHECK(code_of([] { neg_cf_expand(3, 3); }) == ErrorCode::InvalidFraction);
  CHECK(code_of([] { neg_cf_expand(3, 0); }) == ErrorCode::InvalidFraction);
}

TEST_CASE("dual") {
  CHECK(neg_cf_dual(5, 4) == 4);
  CHECK(neg_cf_dual(7, 3) == 5);
  CHECK(neg_cf_dual(2, 1) == 1);
}

TEST_CASE("round trip for p up to 10^4 (sampled q)") {
  std::mt19937_64 rng(20240611);
  for (long p = 2; p <= 10000; ++p) {
    std::uniform_int_distribution<long> pick(1, p - 1);
    for (int t = 0; t < 4; ++t) {
      long q = pick(rng);
      if (std::gcd(p, q) != 1) continue;
      auto cf = neg_cf_expand(p, q);
      REQUIRE(std::all_of(cf.entries.begin(), cf.entries.end(), [](auto b) { return b >= 2; }));
      REQUIRE(neg_cf_value(cf.entries) == Rational(p, q));
    }
  }
}

TEST_CASE("weight sequences") {
  auto w = weight_sequence(3, 2);
  CHECK(w.m == std::vector<Int>{2, 1, 1});
  CHECK(weight_sequence(0, 1).m.empty());
  CHECK(weight_sequence(5, 3).m == std::vector<Int>{3, 2, 1, 1});
  CHECK(weight_sequence(2, 3).m == std::vector<Int>{2, 1, 1});
  CHECK(weight_sequence(1, 1).m == std::vector<Int>{1});
  CHECK(code_of([] { weight_sequence(4, 6); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { weight_sequence(0, 0); }) == ErrorCode::NotCoprime);
}
