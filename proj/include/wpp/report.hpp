#pragma once

// Per-triple reports: plain data extracted from a resolution and its ruling,
// with a lossless JSON form (rationals as "p/q" strings).

#include "wpp/resolution.hpp"
#include "wpp/rulings.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wpp::report {

inline constexpr int kSchemaVersion = 1;

using Coeffs = std::vector<Int>;

struct StringReport {
  std::string name;  ///< S_a, S_b, S_c
  strings::SelfInts selfints;
  std::vector<Coeffs> classes;
  Rational fraction;  ///< r/q read in the stored orientation
  bool operator==(const StringReport&) const = default;
};

struct ConnectorReport {
  std::string name;  ///< N_a, N_b, N_c
  Coeffs cls;
  std::int64_t selfint = 0;
  Rational area;
  bool operator==(const ConnectorReport&) const = default;
};

struct Def13Summary {
  bool full = false, abc_type = false, gap_admissible = false, sub_toric = true;
  std::array<int, 3> perm{};
  std::array<bool, 3> reversed{};
  std::array<Rational, 3> gaps;  ///< e(S_b,S_c), e(S_a,S_c), e(S_a,S_b)
  Rational adjoint_area;
  std::string method;
  bool operator==(const Def13Summary&) const = default;
};

struct LemmaChecks {
  bool lemma32 = false;      ///< [N_a]^2 = [N_b]^2 = -1, [N_c]^2 >= -1
  bool cor34 = false;        ///< sum of b-entries >= 3n - 6
  bool lemma38 = false;      ///< classification consistent with the strings
  int lemma38_applicable = 0;
  bool adjunction = false;   ///< defect 0 on every component
  bool k2 = false;           ///< K^2 = 9 - n
  bool operator==(const LemmaChecks&) const = default;
};

struct RulingSummary {
  std::size_t nu_a = 0, nu_b = 0;
  Coeffs F;
  Int pa, qa, pb, qb;
  std::string kind;
  std::optional<std::array<std::size_t, 2>> cusp;
  std::optional<std::size_t> meet;
  Int selfint, k_dot;
  Rational area;
  std::vector<Int> deltas_a, deltas_b;
  std::optional<std::size_t> cusp_blowups;  ///< L for the unicuspidal case
  bool operator==(const RulingSummary&) const = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::array<Int, 3> input;      ///< weights as given
  std::array<Int, 3> canonical;  ///< a < b < c
  /// a_b, a_c, b_a, b_c, c_a, c_b of the canonical triple.
  std::array<Int, 6> residues;
  int presentation = 1;
  std::string eps;
  std::size_t n = 0;
  Int k2;
  std::array<StringReport, 3> strings;
  std::array<ConnectorReport, 3> connectors;
  Def13Summary def13;
  LemmaChecks lemmas;
  std::optional<RulingSummary> ruling;
  std::optional<std::string> ruling_error;
  std::optional<double> timing_ms;
  bool operator==(const Report&) const = default;
};

/// Which parts of the pipeline to evaluate.
struct Checks {
  bool def13 = true, lemmas = true, ruling = true;
  bool cusp_resolution = true;  ///< blow up the cusp of a unicuspidal ruling (needs ruling)
};

Report make_report(const resolution::ResolutionPair& R, const arith::WeightTriple& input, const Checks& checks = {});
/// Runs the whole pipeline; errors propagate.
Report resolve(const arith::WeightTriple& input, int presentation = 1,
               const polygon::EpsSchedule& eps = polygon::EpsSchedule::from_env(), const Checks& checks = {});

nlohmann::json to_json(const Report& r);
Report from_json(const nlohmann::json& j);

/// Plain-text rendering for the terminal.
std::string to_text(const Report& r);

}  // namespace wpp::report
