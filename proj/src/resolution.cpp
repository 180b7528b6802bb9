#include "wpp/resolution.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <map>

namespace wpp::resolution {

namespace {

Rational fraction_of(const SelfInts& s) {
  std::vector<std::int64_t> b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) b[i] = -s[i];
  return arith::neg_cf_value(b);
}

// r/q of the string at each weight, in the stored orientation.
std::array<Rational, 3> expected_fractions(const arith::WeightTriple& w) {
  return {make_rational(w.a, w.a_b), make_rational(w.b, w.b_c), make_rational(w.c, w.c_a)};
}

}  // namespace

homlat::ComponentClasses ResolutionPair::components() const {
  homlat::ComponentClasses D;
  for (const auto& s : strings) D.push_back(s.classes ? *s.classes : std::vector<HClass>{});
  return D;
}

std::vector<HClass> ResolutionPair::all_classes() const {
  std::vector<HClass> out;
  out.reserve(n() + 3);
  for (const auto& s : strings)
    if (s.classes) out.insert(out.end(), s.classes->begin(), s.classes->end());
  for (const auto& c : connectors) out.push_back(c.cls);
  return out;
}

ResolutionPair build_resolution(const arith::WeightTriple& w, int presentation, const polygon::EpsSchedule& eps) {
  if (presentation < 1 || presentation > 6) fail(ErrorCode::Precondition, "presentation must be in 1..6");
  auto can = arith::canonicalize(w);
  ResolutionPair R;
  R.weights = can.sorted;
  R.order = can.order;
  R.presentation = presentation;
  R.eps = eps;
  auto T = polygon::presentation(R.weights, presentation);
  R.polygon = polygon::resolve_corners(T, eps);
  const auto& Q = R.polygon;
  auto ca = polygon::to_projective_basis(polygon::assign_classes(Q));
  if (!ca) fail(ErrorCode::LemmaViolated, "resolution has no CP^2 chart");
  R.lattice = std::move(ca->lattice);
  R.edge_classes = std::move(ca->edge_classes);
  R.area = std::move(ca->area);
  if (R.n() + 3 != Q.size()) fail(ErrorCode::LemmaViolated, "rank does not match the edge count");

  const char* names[3] = {"N_a", "N_b", "N_c"};
  std::array<std::size_t, 3> nidx{};
  for (int i = 0; i < 3; ++i) {
    auto e = Q.find_edge(names[i]);
    if (!e) fail(ErrorCode::LemmaViolated, std::string("missing connector ") + names[i]);
    nidx[i] = *e;
  }
  R.ccw_is_cycle = Q.edges[Q.next(nidx[2])].label[0] == 'A';
  const std::size_t m = Q.size();
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t e = R.ccw_is_cycle ? (nidx[2] + t) % m : (nidx[2] + m - t) % m;
    char c = Q.edges[e].label[0];
    if (c >= 'A' && c <= 'C') R.string_edges[c - 'A'].push_back(e);
  }
  for (int i = 0; i < 3; ++i) {
    auto& S = R.strings[i];
    std::vector<HClass> cls;
    for (auto e : R.string_edges[i]) {
      S.selfints.push_back(ca->selfints[e]);
      cls.push_back(R.edge_classes[e]);
    }
    S.classes = std::move(cls);
    auto& N = R.connectors[i];
    N.edge = nidx[i];
    N.cls = R.edge_classes[nidx[i]];
    N.selfint = ca->selfints[nidx[i]];
    N.area = R.area(N.cls);
  }

  std::size_t total = 0;
  for (const auto& s : R.strings) total += s.length();
  if (total != R.n()) fail(ErrorCode::LemmaViolated, "strings do not fill b2^-");
  auto want = expected_fractions(R.weights);
  for (int i = 0; i < 3; ++i)
    if (fraction_of(R.strings[i].selfints) != want[i])
      fail(ErrorCode::LemmaViolated, "string " + std::string(1, char('a' + i)) + " has type " +
                                         to_string(fraction_of(R.strings[i].selfints)) + ", expected " +
                                         to_string(want[i]));
  return R;
}

std::array<std::int64_t, 3> connector_selfints(const ResolutionPair& R) {
  std::array<std::int64_t, 3> s{R.connectors[0].selfint, R.connectors[1].selfint, R.connectors[2].selfint};
  if (s[0] != -1 || s[1] != -1 || s[2] < -1)
    fail(ErrorCode::LemmaViolated, "connector self-intersections (" + std::to_string(s[0]) + "," +
                                       std::to_string(s[1]) + "," + std::to_string(s[2]) + ") out of bounds");
  return s;
}

Def13Report check_def13(const ResolutionPair& R, GapMethod method, const homlat::ExceptionalOptions& opt) {
  Def13Report rep;
  rep.method = method;
  std::size_t total = 0;
  bool all_present = true;
  for (const auto& s : R.strings) {
    total += s.length();
    if (s.length() == 0) all_present = false;
  }
  rep.full = all_present && total == R.n();

  auto want = expected_fractions(R.weights);
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8 && !rep.match; ++mask) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const auto& S = R.strings[perm[i]];
        if (S.length() == 0 || !S.is_hj()) {
          ok = false;
          break;
        }
        auto sel = (mask >> i & 1) ? S.reversed().selfints : S.selfints;
        ok = fraction_of(sel) == want[i];
      }
      if (ok) rep.match = OrientationMatch{perm, {bool(mask & 1), bool(mask & 2), bool(mask & 4)}};
    }
  } while (!rep.match && std::next_permutation(perm.begin(), perm.end()));
  rep.abc_type = rep.match.has_value();

  Rational adj = R.area(R.lattice.K());
  for (const auto& s : R.strings)
    if (s.classes)
      for (const auto& c : *s.classes) adj += R.area(c);
  rep.adjoint_area = adj;

  // gaps[p] is between the two strings other than p, across connector N_p.
  if (method == GapMethod::Structural) {
    for (int p = 0; p < 3; ++p) {
      const auto& N = R.connectors[p];
      bool exceptional = R.lattice.square(N.cls) == -1 && R.lattice.k_dot(N.cls) == -1;
      rep.gaps[p] = exceptional ? R.area(N.cls) : Rational(0);
    }
  } else {
    auto D = R.components();
    for (int p = 0; p < 3; ++p) {
      int i = p == 0 ? 1 : 0, j = p == 2 ? 1 : 2;
      auto g = homlat::exceptional_gap(R.lattice, R.area, D, i, j, opt);
      rep.gaps[p] = g.value;
      rep.gaps_lower_bound_only = rep.gaps_lower_bound_only || g.lower_bound_only;
    }
  }
  // e(S_a,S_b) = gaps[2], e(S_a,S_c) = gaps[1], e(S_b,S_c) = gaps[0].
  rep.gap_admissible = adj < -rep.gaps[2] - rep.gaps[1] && adj < -rep.gaps[2] - rep.gaps[0] &&
                       adj < -rep.gaps[1] - rep.gaps[0];
  return rep;
}

TwoMinus2 two_minus2_strings(const arith::WeightTriple& w) {
  if (!(w.a > w.b && w.b > 1)) fail(ErrorCode::Precondition, "expects a > b > 1");
  TwoMinus2 out;
  out.both_minus2 = w.a_b == w.a - 1 && w.b_c == w.b - 1;
  Int s = w.c + w.a + w.b, ab = w.a * w.b;
  if (s % ab == 0 && s / ab >= 1) {
    out.c_matches_formula = true;
    long k = to_i64(s / ab);
    out.k = k;
    long a = to_i64(w.a), b = to_i64(w.b);
    if (k >= 2)
      out.predicted_third = SelfInts{-a, -k, -b};
    else if (b != 2)
      out.predicted_third = SelfInts{1 - a, 1 - b};
    else
      out.predicted_third = SelfInts{2 - a};
  }
  return out;
}

Lemma38Check lemma38_check(const ResolutionPair& R) {
  Lemma38Check out;
  const std::array<Int, 3> w{R.weights.a, R.weights.b, R.weights.c};
  auto all_minus2 = [](const SelfInts& s) {
    return std::all_of(s.begin(), s.end(), [](std::int64_t x) { return x == -2; });
  };
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == y || w[x] <= w[y]) continue;
      const int z = 3 - x - y;
      auto t = two_minus2_strings(arith::make_weight_triple(w[x], w[y], w[z]));
      bool actual = all_minus2(R.strings[x].selfints) && all_minus2(R.strings[y].selfints);
      if (t.both_minus2 != actual || t.both_minus2 != t.c_matches_formula) out.consistent = false;
      if (!t.both_minus2) continue;
      ++out.applicable;
      const auto& third = R.strings[z];
      if (!t.predicted_third ||
          (third.selfints != *t.predicted_third && third.reversed().selfints != *t.predicted_third))
        out.consistent = false;
    }
  return out;
}

bool adjunction_holds(const ResolutionPair& R) {
  for (const auto& h : R.all_classes())
    if (homlat::adjunction_defect(R.lattice, h) != 0) return false;
  return true;
}

Int string_weight_sum(const ResolutionPair& R) {
  Int s = 0;
  for (const auto& S : R.strings)
    for (auto x : S.selfints) s -= x;
  return s;
}

bool corollary_3n6(const ResolutionPair& R) { return string_weight_sum(R) >= Int(3 * long(R.n()) - 6); }

TorelliReport torelli_compare(const ResolutionPair& R1, const ResolutionPair& R2) {
  if (!(R1.weights == R2.weights)) fail(ErrorCode::Precondition, "torelli_compare needs the same weight triple");
  TorelliReport rep;
  if (R1.n() != R2.n()) {
    rep.note = "different ranks";
    return rep;
  }
  auto c1 = R1.all_classes(), c2 = R2.all_classes();
  if (c1.size() != c2.size()) {
    rep.note = "different component counts";
    return rep;
  }
  const std::size_t n = R1.n();
  if (R1.area.values[0] != R2.area.values[0]) {
    rep.note = "areas of H differ; not found within family";
    return rep;
  }
  for (std::size_t t = 0; t < c1.size(); ++t)
    if (c1[t][0] != c2[t][0]) {
      rep.note = "H coefficients differ; not found within family";
      return rep;
    }
  // A permutation fixing H must carry E_i to some E_j with the same column of
  // coefficients across all components and the same area.
  using Sig = std::pair<std::vector<Int>, Rational>;
  auto signature = [](const std::vector<HClass>& cs, const homlat::AreaForm& area, std::size_t i) {
    Sig s;
    for (const auto& c : cs) s.first.push_back(c[i]);
    s.second = area.values[i];
    return s;
  };
  std::map<Sig, std::vector<std::size_t>> pool;
  for (std::size_t i = 1; i <= n; ++i) pool[signature(c2, R2.area, i)].push_back(i);
  rep.perm.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    auto it = pool.find(signature(c1, R1.area, i));
    if (it == pool.end() || it->second.empty()) {
      rep.perm.clear();
      rep.note = "not found within family (no match for E_" + std::to_string(i) + ")";
      return rep;
    }
    rep.perm[i] = it->second.back();
    it->second.pop_back();
  }
  rep.found = true;
  rep.note = "found within family";
  return rep;
}

std::array<std::vector<HClass>, 3> predicted_gap_sets(const ResolutionPair& R) {
  std::array<std::vector<HClass>, 3> out;
  for (int p = 0; p < 3; ++p)
    if (R.connectors[p].selfint == -1) out[p].push_back(R.connectors[p].cls);
  return out;
}

GapOracleResult gap_oracle(const ResolutionPair& R, const homlat::ExceptionalOptions& opt) {
  GapOracleResult res;
  res.expected = predicted_gap_sets(R);
  auto D = R.components();
  for (int p = 0; p < 3; ++p) {
    int i = p == 0 ? 1 : 0, j = p == 2 ? 1 : 2;
    auto set = homlat::connecting_log_exceptional(R.lattice, R.area, D, i, j, opt);
    res.found[p] = set.classes;
    res.possibly_incomplete = res.possibly_incomplete || set.possibly_incomplete;
    auto exp = res.expected[p];
    std::sort(exp.begin(), exp.end());
    auto got = set.classes;
    std::sort(got.begin(), got.end());
    if (got != exp) res.exact = false;
    if (!std::includes(got.begin(), got.end(), exp.begin(), exp.end())) res.contains_expected = false;
  }
  return res;
}

}  // namespace wpp::resolution
