#pragma once

// Range scans over pairwise coprime triples 2 <= a < b < c <= max_c.

#include "wpp/report.hpp"

#include <string>
#include <vector>

namespace wpp::scan {

enum class CheckSet { All, Def13, Lemma32, Cor34, Prop51 };
CheckSet parse_check(const std::string& s);
std::string to_string(CheckSet c);

struct Options {
  long max_c = 30;
  CheckSet check = CheckSet::All;
  std::vector<int> presentations{1, 2, 3, 4, 5, 6};
  polygon::EpsSchedule eps;
  int jobs = 0;  ///< 0 = OpenMP default
  bool keep_reports = false;     ///< otherwise only the summary and violations are kept
  bool cusp_resolution = false;  ///< also resolve every unicuspidal ruling
};

struct Violation {
  std::array<long, 3> triple{};
  int presentation = 0;
  std::string what;
  bool operator==(const Violation&) const = default;
};

struct Summary {
  long triples = 0, pipelines = 0;
  long embedded_fiber = 0, unicuspidal = 0;
  long nc_nonneg = 0, nc_minus1 = 0;
  long lemma38_applicable = 0;
  bool operator==(const Summary&) const = default;
};

struct Result {
  std::vector<report::Report> reports;  ///< triple order, then presentation order; see keep_reports
  std::vector<Violation> violations;
  Summary summary;
  bool operator==(const Result&) const = default;
};

std::vector<std::array<long, 3>> triples(long max_c);

/// Serial reference.
Result run_serial(const Options& opt);
/// Triples distributed over OpenMP threads; merged by triple order, so the
/// output equals run_serial.
Result run_parallel(const Options& opt);

std::string summary_table(const Result& r, const Options& opt);

}  // namespace wpp::scan
