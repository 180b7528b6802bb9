#include "wpp/error.hpp"
#include "wpp/render.hpp"
#include "wpp/report.hpp"
#include "wpp/scan.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace wpp;

namespace {
report::Report rep(long a, long b, long c, int p = 1) {
  return report::resolve(arith::make_weight_triple(a, b, c), p, polygon::EpsSchedule{});
}
std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}
}  // namespace

TEST_CASE("report of CP(2,3,5)") {
  auto r = rep(2, 3, 5);
  CHECK(r.n == 6);
  CHECK(r.k2 == 3);
  CHECK(r.residues[4] == 4);
  CHECK(r.residues[5] == 4);
  CHECK(r.strings[0].selfints == strings::SelfInts{-2});
  CHECK(r.strings[1].selfints == strings::SelfInts{-3});
  CHECK(r.strings[2].selfints == strings::SelfInts{-2, -2, -2, -2});
  REQUIRE(r.ruling);
  CHECK(r.ruling->kind == "embedded-fiber");
  CHECK(r.def13.full);
  CHECK(r.lemmas.k2);
}

TEST_CASE("JSON round trip") {
  for (auto t : {std::array<long, 3>{2, 3, 5}, {11, 13, 14}, {5, 7, 9}}) {
    for (int p = 1; p <= 6; ++p) {
      auto r = rep(t[0], t[1], t[2], p);
      auto j = report::to_json(r);
      auto back = report::from_json(nlohmann::json::parse(j.dump()));
      CHECK(back == r);
    }
  }
}

TEST_CASE("JSON keeps large integers exact") {
  auto r = rep(2, 3, 5);
  r.k2 = Int("123456789012345678901234567890");
  auto back = report::from_json(report::to_json(r));
  CHECK(back.k2 == r.k2);
}

TEST_CASE("text report mentions every string") {
  auto s = report::to_text(rep(11, 13, 14));
  CHECK(s.find("S_a") != std::string::npos);
  CHECK(s.find("S_b") != std::string::npos);
  CHECK(s.find("S_c") != std::string::npos);
  CHECK(s.find("unicuspidal") != std::string::npos);
}

TEST_CASE("scan triples") {
  auto t = scan::triples(5);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == std::array<long, 3>{2, 3, 5});
  CHECK(t[1] == std::array<long, 3>{3, 4, 5});
  for (auto& x : scan::triples(20)) {
    CHECK(x[0] < x[1]);
    CHECK(x[1] < x[2]);
  }
}

TEST_CASE("parallel scan equals serial scan") {
  scan::Options opt;
  opt.max_c = 13;
  opt.check = scan::CheckSet::All;
  opt.keep_reports = true;
  opt.cusp_resolution = true;
  auto s = scan::run_serial(opt);
  auto p = scan::run_parallel(opt);
  CHECK(s == p);
  CHECK(s.violations.empty());
  CHECK(s.summary.pipelines == 6 * s.summary.triples);
  CHECK(s.summary.embedded_fiber + s.summary.unicuspidal == s.summary.pipelines);
  CHECK(s.summary.embedded_fiber == s.summary.nc_nonneg);
  CHECK(s.reports.size() == std::size_t(s.summary.pipelines));
  for (const auto& r : s.reports)
    if (r.ruling && r.ruling->kind == "unicuspidal") CHECK(r.ruling->cusp_blowups.has_value());
  opt.keep_reports = false;
  auto lean = scan::run_parallel(opt);
  CHECK(lean.reports.empty());
  CHECK(lean.summary == s.summary);
}

TEST_CASE("check set names") {
  for (auto c : {scan::CheckSet::All, scan::CheckSet::Def13, scan::CheckSet::Lemma32, scan::CheckSet::Cor34,
                 scan::CheckSet::Prop51})
    CHECK(scan::parse_check(scan::to_string(c)) == c);
  CHECK_THROWS_AS(scan::parse_check("nope"), std::invalid_argument);
}

TEST_CASE("SVG polygon of CP(2,3,5)") {
  auto R = resolution::build_resolution(arith::make_weight_triple(2, 3, 5), 1);
  auto svg = render::render(R, render::What::Polygon, render::Format::Svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(R.polygon.size() == 9);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(count(svg, "<text") == R.polygon.size());
}

TEST_CASE("TikZ ruling of CP(11,13,14) marks the cusp") {
  auto R = resolution::build_resolution(arith::make_weight_triple(11, 13, 14), 1);
  auto tikz = render::render(R, render::What::Ruling, render::Format::Tikz);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("cusp") != std::string::npos);
  CHECK(tikz.find("(2,3)") != std::string::npos);
}

TEST_CASE("render options") {
  CHECK(render::parse_what("strings") == render::What::Strings);
  CHECK(render::parse_format("tikz") == render::Format::Tikz);
  CHECK_THROWS_AS(render::parse_what("x"), std::invalid_argument);
  CHECK_THROWS_AS(render::parse_format("png"), std::invalid_argument);
}
