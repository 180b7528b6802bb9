#include "wpp/scan.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpp::scan {

CheckSet parse_check(const std::string& s) {
  if (s == "all") return CheckSet::All;
  if (s == "def13") return CheckSet::Def13;
  if (s == "lemma32") return CheckSet::Lemma32;
  if (s == "cor34") return CheckSet::Cor34;
  if (s == "prop51") return CheckSet::Prop51;
  throw std::invalid_argument("unknown check '" + s + "'");
}

std::string to_string(CheckSet c) {
  switch (c) {
    case CheckSet::All: return "all";
    case CheckSet::Def13: return "def13";
    case CheckSet::Lemma32: return "lemma32";
    case CheckSet::Cor34: return "cor34";
    case CheckSet::Prop51: return "prop51";
  }
  return "";
}

std::vector<std::array<long, 3>> triples(long max_c) {
  std::vector<std::array<long, 3>> out;
  for (long c = 4; c <= max_c; ++c)
    for (long b = 3; b < c; ++b)
      for (long a = 2; a < b; ++a)
        if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

report::Checks checks_for(CheckSet c, bool cusp) {
  report::Checks k;
  k.cusp_resolution = cusp;
  k.def13 = c == CheckSet::All || c == CheckSet::Def13;
  k.ruling = c == CheckSet::All || c == CheckSet::Prop51;
  k.lemmas = true;  // cheap, and needed by lemma32 / cor34
  return k;
}

struct TripleOutcome {
  std::vector<report::Report> reports;
  std::vector<Violation> violations;
  Summary summary;
};

void tally(Summary& s, const report::Report& r) {
  ++s.pipelines;
  if (r.connectors[2].selfint >= 0)
    ++s.nc_nonneg;
  else
    ++s.nc_minus1;
  if (r.ruling) {
    if (r.ruling->kind == "unicuspidal")
      ++s.unicuspidal;
    else
      ++s.embedded_fiber;
  }
  s.lemma38_applicable += r.lemmas.lemma38_applicable;
}

TripleOutcome run_triple(const std::array<long, 3>& t, const Options& opt) {
  TripleOutcome out;
  const auto checks = checks_for(opt.check, opt.cusp_resolution);
  auto w = arith::make_weight_triple(t[0], t[1], t[2]);
  for (int p : opt.presentations) {
    auto bad = [&](const std::string& what) { out.violations.push_back({t, p, what}); };
    try {
      auto R = resolution::build_resolution(w, p, opt.eps);
      auto r = report::make_report(R, w, checks);
      const auto& l = r.lemmas;
      const auto c = opt.check;
      const bool all = c == CheckSet::All;
      if (all || c == CheckSet::Def13) {
        if (!r.def13.full) bad("divisor is not full");
        if (!r.def13.abc_type) bad("strings are not of (a,b,c)-type");
        if (!r.def13.gap_admissible) bad("divisor is not gap-admissible");
      }
      if ((all || c == CheckSet::Lemma32) && !l.lemma32) bad("connector square bounds fail");
      if ((all || c == CheckSet::Cor34) && !l.cor34) bad("string entry sum inequality fails");
      if (all) {
        if (!l.lemma38) bad("(-2)-string classification inconsistent");
        if (!l.adjunction) bad("adjunction defect nonzero");
        if (!l.k2) bad("K^2 != 9 - n");
      }
      if ((all || c == CheckSet::Prop51) && !r.ruling) bad("ruling: " + r.ruling_error.value_or("missing"));
      tally(out.summary, r);
      if (opt.keep_reports) out.reports.push_back(std::move(r));
    } catch (const Error& e) {
      bad(std::string(wpp::to_string(e.code())) + ": " + e.what());
    }
  }
  return out;
}

Result merge(std::vector<TripleOutcome>& parts) {
  Result res;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.reports.size();
  res.reports.reserve(total);
  for (auto& p : parts) {
    auto& s = res.summary;
    ++s.triples;
    s.pipelines += p.summary.pipelines;
    s.nc_nonneg += p.summary.nc_nonneg;
    s.nc_minus1 += p.summary.nc_minus1;
    s.unicuspidal += p.summary.unicuspidal;
    s.embedded_fiber += p.summary.embedded_fiber;
    s.lemma38_applicable += p.summary.lemma38_applicable;
    for (auto& r : p.reports) res.reports.push_back(std::move(r));
    for (auto& v : p.violations) res.violations.push_back(std::move(v));
  }
  return res;
}

}  // namespace

Result run_serial(const Options& opt) {
  auto ts = triples(opt.max_c);
  std::vector<TripleOutcome> parts(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) parts[i] = run_triple(ts[i], opt);
  return merge(parts);
}

Result run_parallel(const Options& opt) {
  auto ts = triples(opt.max_c);
  std::vector<TripleOutcome> parts(ts.size());
#ifdef _OPENMP
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
  for (long i = 0; i < long(ts.size()); ++i) parts[i] = run_triple(ts[i], opt);
  return merge(parts);
}

std::string summary_table(const Result& r, const Options& opt) {
  const auto& s = r.summary;
  std::ostringstream os;
  os << "scan max_c=" << opt.max_c << " check=" << to_string(opt.check) << "\n";
  os << "  triples             " << s.triples << "\n";
  os << "  pipelines           " << s.pipelines << "\n";
  os << "  [N_c]^2 >= 0        " << s.nc_nonneg << "\n";
  os << "  [N_c]^2 = -1        " << s.nc_minus1 << "\n";
  if (opt.check == CheckSet::All || opt.check == CheckSet::Prop51) {
    os << "  embedded fiber      " << s.embedded_fiber << "\n";
    os << "  unicuspidal         " << s.unicuspidal << "\n";
  }
  os << "  violations          " << r.violations.size() << "\n";
  return os.str();
}

}  // namespace wpp::scan
