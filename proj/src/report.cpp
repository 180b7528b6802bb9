#include "wpp/report.hpp"

#include "wpp/error.hpp"

#include <chrono>
#include <sstream>

namespace wpp::report {

using nlohmann::json;

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long>());
}

json ints_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

std::vector<Int> ints_from(const json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from(x));
  return v;
}

template <std::size_t N>
json ints_json(const std::array<Int, N>& v) {
  return ints_json(std::vector<Int>(v.begin(), v.end()));
}

template <std::size_t N>
std::array<Int, N> int_array_from(const json& j) {
  auto v = ints_from(j);
  if (v.size() != N) throw std::invalid_argument("wrong array length in report");
  std::array<Int, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
  return out;
}

json rat_json(const Rational& r) { return to_string(r); }
Rational rat_from(const json& j) { return parse_rational(j.get<std::string>()); }

Coeffs coeffs(const homlat::HClass& h) { return h.coeffs; }

}  // namespace

Report make_report(const resolution::ResolutionPair& R, const arith::WeightTriple& input, const Checks& checks) {
  Report r;
  r.input = {input.a, input.b, input.c};
  const auto& w = R.weights;
  r.canonical = {w.a, w.b, w.c};
  r.residues = {w.a_b, w.a_c, w.b_a, w.b_c, w.c_a, w.c_b};
  r.presentation = R.presentation;
  r.eps = R.eps.to_string();
  r.n = R.n();
  r.k2 = R.lattice.square(R.lattice.K());
  for (int i = 0; i < 3; ++i) {
    auto& s = r.strings[i];
    s.name = std::string("S_") + char('a' + i);
    s.selfints = R.strings[i].selfints;
    for (const auto& h : *R.strings[i].classes) s.classes.push_back(coeffs(h));
    std::vector<std::int64_t> b;
    for (auto x : s.selfints) b.push_back(-x);
    s.fraction = arith::neg_cf_value(b);
    auto& c = r.connectors[i];
    c.name = std::string("N_") + char('a' + i);
    c.cls = coeffs(R.connectors[i].cls);
    c.selfint = R.connectors[i].selfint;
    c.area = R.connectors[i].area;
  }
  if (checks.def13) {
    auto d = resolution::check_def13(R);
    r.def13.full = d.full;
    r.def13.abc_type = d.abc_type;
    r.def13.gap_admissible = d.gap_admissible;
    r.def13.sub_toric = d.sub_toric;
    if (d.match) {
      r.def13.perm = d.match->perm;
      r.def13.reversed = d.match->reversed;
    }
    r.def13.gaps = d.gaps;
    r.def13.adjoint_area = d.adjoint_area;
    r.def13.method = d.method == resolution::GapMethod::Structural ? "structural" : "enumerate";
  }
  if (checks.lemmas) {
    const auto& N = R.connectors;
    r.lemmas.lemma32 = N[0].selfint == -1 && N[1].selfint == -1 && N[2].selfint >= -1;
    r.lemmas.cor34 = resolution::corollary_3n6(R);
    auto l = resolution::lemma38_check(R);
    r.lemmas.lemma38 = l.consistent;
    r.lemmas.lemma38_applicable = l.applicable;
    r.lemmas.adjunction = resolution::adjunction_holds(R);
    r.lemmas.k2 = r.k2 == Int(9 - long(r.n));
  }
  if (checks.ruling) {
    try {
      auto rd = rulings::ruling(R);
      RulingSummary s;
      s.nu_a = rd.nu_a;
      s.nu_b = rd.nu_b;
      s.F = coeffs(rd.F);
      s.pa = rd.pa;
      s.qa = rd.qa;
      s.pb = rd.pb;
      s.qb = rd.qb;
      s.kind = rulings::to_string(rd.kind);
      if (rd.cusp_location) s.cusp = std::array<std::size_t, 2>{rd.cusp_location->first, rd.cusp_location->second};
      s.meet = rd.meet_component;
      s.selfint = rd.selfint;
      s.k_dot = rd.k_dot;
      s.area = rd.area;
      s.deltas_a = rd.deltas_a.deltas;
      s.deltas_b = rd.deltas_b.deltas;
      if (checks.cusp_resolution && rd.kind == rulings::RulingCase::Unicuspidal) {
        auto res = rulings::ruling_resolution(R, rd);
        s.cusp_blowups = res.blowups;
      }
      r.ruling = std::move(s);
    } catch (const Error& e) {
      if (e.is_invariant_violation()) throw;
      r.ruling_error = e.what();
    }
  }
  return r;
}

Report resolve(const arith::WeightTriple& input, int presentation, const polygon::EpsSchedule& eps,
               const Checks& checks) {
  auto t0 = std::chrono::steady_clock::now();
  auto R = resolution::build_resolution(input, presentation, eps);
  Report r = make_report(R, input, checks);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["input"] = ints_json(r.input);
  j["canonical"] = ints_json(r.canonical);
  j["residues"] = ints_json(r.residues);
  j["presentation"] = r.presentation;
  j["eps"] = r.eps;
  j["n"] = r.n;
  j["K2"] = int_json(r.k2);
  j["strings"] = json::array();
  for (const auto& s : r.strings) {
    json c = json::array();
    for (const auto& h : s.classes) c.push_back(ints_json(h));
    j["strings"].push_back(
        {{"name", s.name}, {"selfints", s.selfints}, {"classes", c}, {"fraction", rat_json(s.fraction)}});
  }
  j["connectors"] = json::array();
  for (const auto& c : r.connectors)
    j["connectors"].push_back(
        {{"name", c.name}, {"class", ints_json(c.cls)}, {"selfint", c.selfint}, {"area", rat_json(c.area)}});
  const auto& d = r.def13;
  json gaps = json::array();
  for (const auto& g : d.gaps) gaps.push_back(rat_json(g));
  j["def13"] = {{"full", d.full},
                {"abc_type", d.abc_type},
                {"gap_admissible", d.gap_admissible},
                {"sub_toric", d.sub_toric},
                {"perm", d.perm},
                {"reversed", d.reversed},
                {"gaps", gaps},
                {"adjoint_area", rat_json(d.adjoint_area)},
                {"method", d.method}};
  const auto& l = r.lemmas;
  j["lemmas"] = {{"lemma32", l.lemma32},       {"cor34", l.cor34}, {"lemma38", l.lemma38},
                 {"lemma38_applicable", l.lemma38_applicable}, {"adjunction", l.adjunction}, {"K2", l.k2}};
  if (r.ruling) {
    const auto& s = *r.ruling;
    json rj = {{"nu_a", s.nu_a},
               {"nu_b", s.nu_b},
               {"F", ints_json(s.F)},
               {"pa", int_json(s.pa)},
               {"qa", int_json(s.qa)},
               {"pb", int_json(s.pb)},
               {"qb", int_json(s.qb)},
               {"kind", s.kind},
               {"selfint", int_json(s.selfint)},
               {"K_dot", int_json(s.k_dot)},
               {"area", rat_json(s.area)},
               {"deltas_a", ints_json(s.deltas_a)},
               {"deltas_b", ints_json(s.deltas_b)}};
    if (s.cusp) rj["cusp"] = *s.cusp;
    if (s.meet) rj["meet"] = *s.meet;
    if (s.cusp_blowups) rj["cusp_blowups"] = *s.cusp_blowups;
    j["ruling"] = rj;
  }
  if (r.ruling_error) j["ruling_error"] = *r.ruling_error;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Report from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) throw std::invalid_argument("unsupported report schema version");
  r.input = int_array_from<3>(j.at("input"));
  r.canonical = int_array_from<3>(j.at("canonical"));
  r.residues = int_array_from<6>(j.at("residues"));
  r.presentation = j.at("presentation").get<int>();
  r.eps = j.at("eps").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.k2 = int_from(j.at("K2"));
  const auto& ss = j.at("strings");
  const auto& cs = j.at("connectors");
  if (ss.size() != 3 || cs.size() != 3) throw std::invalid_argument("expected three strings and connectors");
  for (std::size_t i = 0; i < 3; ++i) {
    auto& s = r.strings[i];
    s.name = ss[i].at("name").get<std::string>();
    s.selfints = ss[i].at("selfints").get<strings::SelfInts>();
    for (const auto& h : ss[i].at("classes")) s.classes.push_back(ints_from(h));
    s.fraction = rat_from(ss[i].at("fraction"));
    auto& c = r.connectors[i];
    c.name = cs[i].at("name").get<std::string>();
    c.cls = ints_from(cs[i].at("class"));
    c.selfint = cs[i].at("selfint").get<std::int64_t>();
    c.area = rat_from(cs[i].at("area"));
  }
  const auto& d = j.at("def13");
  r.def13.full = d.at("full").get<bool>();
  r.def13.abc_type = d.at("abc_type").get<bool>();
  r.def13.gap_admissible = d.at("gap_admissible").get<bool>();
  r.def13.sub_toric = d.at("sub_toric").get<bool>();
  r.def13.perm = d.at("perm").get<std::array<int, 3>>();
  r.def13.reversed = d.at("reversed").get<std::array<bool, 3>>();
  for (std::size_t i = 0; i < 3; ++i) r.def13.gaps[i] = rat_from(d.at("gaps").at(i));
  r.def13.adjoint_area = rat_from(d.at("adjoint_area"));
  r.def13.method = d.at("method").get<std::string>();
  const auto& l = j.at("lemmas");
  r.lemmas.lemma32 = l.at("lemma32").get<bool>();
  r.lemmas.cor34 = l.at("cor34").get<bool>();
  r.lemmas.lemma38 = l.at("lemma38").get<bool>();
  r.lemmas.lemma38_applicable = l.at("lemma38_applicable").get<int>();
  r.lemmas.adjunction = l.at("adjunction").get<bool>();
  r.lemmas.k2 = l.at("K2").get<bool>();
  if (j.contains("ruling")) {
    const auto& rj = j.at("ruling");
    RulingSummary s;
    s.nu_a = rj.at("nu_a").get<std::size_t>();
    s.nu_b = rj.at("nu_b").get<std::size_t>();
    s.F = ints_from(rj.at("F"));
    s.pa = int_from(rj.at("pa"));
    s.qa = int_from(rj.at("qa"));
    s.pb = int_from(rj.at("pb"));
    s.qb = int_from(rj.at("qb"));
    s.kind = rj.at("kind").get<std::string>();
    if (rj.contains("cusp")) s.cusp = rj.at("cusp").get<std::array<std::size_t, 2>>();
    if (rj.contains("meet")) s.meet = rj.at("meet").get<std::size_t>();
    if (rj.contains("cusp_blowups")) s.cusp_blowups = rj.at("cusp_blowups").get<std::size_t>();
    s.selfint = int_from(rj.at("selfint"));
    s.k_dot = int_from(rj.at("K_dot"));
    s.area = rat_from(rj.at("area"));
    s.deltas_a = ints_from(rj.at("deltas_a"));
    s.deltas_b = ints_from(rj.at("deltas_b"));
    r.ruling = std::move(s);
  }
  if (j.contains("ruling_error")) r.ruling_error = j.at("ruling_error").get<std::string>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  auto seq = [](const auto& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  os << "CP(" << r.canonical[0] << "," << r.canonical[1] << "," << r.canonical[2] << ")  presentation T"
     << r.presentation << "  eps " << r.eps << "\n";
  os << "residues a_b=" << r.residues[0] << " a_c=" << r.residues[1] << " b_a=" << r.residues[2]
     << " b_c=" << r.residues[3] << " c_a=" << r.residues[4] << " c_b=" << r.residues[5] << "\n";
  os << "resolution CP^2 # " << r.n << " -CP^2,  K^2 = " << r.k2 << "\n";
  for (const auto& s : r.strings) os << "  " << s.name << " " << seq(s.selfints) << "  r = " << to_string(s.fraction) << "\n";
  for (const auto& c : r.connectors)
    os << "  " << c.name << "^2 = " << c.selfint << "  area " << to_string(c.area) << "\n";
  const auto& d = r.def13;
  os << "divisor: full=" << d.full << " abc_type=" << d.abc_type << " gap_admissible=" << d.gap_admissible
     << " sub_toric=" << d.sub_toric << "  adjoint area " << to_string(d.adjoint_area) << "\n";
  const auto& l = r.lemmas;
  os << "checks: lemma32=" << l.lemma32 << " cor34=" << l.cor34 << " lemma38=" << l.lemma38
     << " adjunction=" << l.adjunction << " K2=" << l.k2 << "\n";
  if (r.ruling) {
    const auto& s = *r.ruling;
    os << "ruling: " << s.kind << "  nu=(" << s.nu_a << "," << s.nu_b << ")  (p,q)=(" << s.pa << "," << s.qa
       << ")  F^2=" << s.selfint << "  K.F=" << s.k_dot;
    if (s.cusp) os << "  cusp at C" << (*s.cusp)[0] << " / C" << (*s.cusp)[1];
    if (s.meet) os << "  meets C" << *s.meet;
    os << "\n";
  }
  if (r.ruling_error) os << "ruling: " << *r.ruling_error << "\n";
  return os.str();
}

}  // namespace wpp::report
