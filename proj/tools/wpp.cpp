// Command-line front end: resolve, scan and render.

#include "wpp/error.hpp"
#include "wpp/render.hpp"
#include "wpp/report.hpp"
#include "wpp/scan.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kOk = 0, kBadInput = 2, kViolation = 3;

wpp::arith::WeightTriple triple_from(const std::vector<std::string>& w) {
  if (w.size() != 3) throw std::invalid_argument("expected three weights");
  std::array<wpp::Int, 3> v;
  for (int i = 0; i < 3; ++i) {
    if (w[i].empty() || w[i].find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("weight '" + w[i] + "' is not a positive integer");
    v[i] = wpp::Int(w[i]);
  }
  return wpp::arith::make_weight_triple(v[0], v[1], v[2]);
}

wpp::polygon::EpsSchedule eps_from(const std::string& s) {
  return s.empty() ? wpp::polygon::EpsSchedule::from_env() : wpp::polygon::EpsSchedule::parse(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal resolutions of weighted projective planes CP(a,b,c)"};
  app.require_subcommand(1);

  std::vector<std::string> weights;
  int presentation = 1;
  std::string eps;

  auto* resolve = app.add_subcommand("resolve", "Resolve CP(a,b,c) and report strings, divisor predicates and the ruling");
  resolve->add_option("weights", weights, "a b c")->expected(3)->required();
  resolve->add_option("-p,--presentation", presentation, "moment triangle T1..T6")->check(CLI::Range(1, 6));
  resolve->add_option("--eps", eps, "truncation schedule first:ratio (default WPP_EPS_SCHEDULE or 1/4:1/3)");
  bool json_out = false;
  auto* json_flag = resolve->add_flag("--json", json_out, "JSON report");
  resolve->add_flag("--text", "plain-text report (default)")->excludes(json_flag);

  auto* scan = app.add_subcommand("scan", "Check every pairwise coprime triple with c <= max-c");
  long max_c = 30;
  int jobs = 0;
  std::string check = "all";
  bool scan_json = false, serial = false, cusp = false;
  scan->add_option("--max-c", max_c, "largest weight")->check(CLI::Range(3L, 100000L));
  scan->add_option("--jobs", jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  scan->add_option("--check", check, "all|def13|lemma32|cor34|prop51");
  scan->add_option("--eps", eps, "truncation schedule first:ratio");
  scan->add_flag("--json", scan_json, "print summary, violations and per-triple reports as JSON");
  scan->add_flag("--serial", serial, "use the serial reference loop");
  scan->add_flag("--cusp", cusp, "also resolve the cusp of every unicuspidal ruling");

  auto* render = app.add_subcommand("render", "Emit a figure on standard output");
  std::string what = "polygon", format = "svg";
  render->add_option("weights", weights, "a b c")->expected(3)->required();
  render->add_option("-p,--presentation", presentation, "moment triangle T1..T6")->check(CLI::Range(1, 6));
  render->add_option("--what", what, "polygon|strings|ruling");
  render->add_option("--format", format, "svg|tikz");
  render->add_option("--eps", eps, "truncation schedule first:ratio");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*resolve) {
      auto w = triple_from(weights);
      auto r = wpp::report::resolve(w, presentation, eps_from(eps));
      if (json_out)
        std::cout << wpp::report::to_json(r).dump(2) << "\n";
      else
        std::cout << wpp::report::to_text(r);
      return kOk;
    }
    if (*scan) {
      wpp::scan::Options opt;
      opt.max_c = max_c;
      opt.jobs = jobs;
      opt.check = wpp::scan::parse_check(check);
      opt.eps = eps_from(eps);
      opt.keep_reports = scan_json;
      opt.cusp_resolution = cusp;
      auto res = serial ? wpp::scan::run_serial(opt) : wpp::scan::run_parallel(opt);
      if (scan_json) {
        nlohmann::json j;
        j["summary"] = {{"max_c", opt.max_c},
                        {"check", wpp::scan::to_string(opt.check)},
                        {"triples", res.summary.triples},
                        {"pipelines", res.summary.pipelines},
                        {"nc_nonneg", res.summary.nc_nonneg},
                        {"nc_minus1", res.summary.nc_minus1},
                        {"embedded_fiber", res.summary.embedded_fiber},
                        {"unicuspidal", res.summary.unicuspidal}};
        j["violations"] = nlohmann::json::array();
        for (const auto& v : res.violations)
          j["violations"].push_back({{"triple", v.triple}, {"presentation", v.presentation}, {"what", v.what}});
        j["reports"] = nlohmann::json::array();
        for (auto r : res.reports) {
          r.timing_ms.reset();
          j["reports"].push_back(wpp::report::to_json(r));
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << wpp::scan::summary_table(res, opt);
      }
      if (!res.violations.empty()) {
        const auto& v = res.violations.front();
        std::cerr << "violation: " << v.what << "\nreproduce: wpp resolve " << v.triple[0] << " " << v.triple[1] << " "
                  << v.triple[2] << " --presentation " << v.presentation << "\n";
        return kViolation;
      }
      return kOk;
    }
    if (*render) {
      auto w_ = wpp::render::parse_what(what);
      auto f_ = wpp::render::parse_format(format);
      auto R = wpp::resolution::build_resolution(triple_from(weights), presentation, eps_from(eps));
      std::cout << wpp::render::render(R, w_, f_);
      return kOk;
    }
  } catch (const wpp::Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_invariant_violation() ? kViolation : kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
