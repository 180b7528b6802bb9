#include "wpp/rulings.hpp"

#include "wpp/error.hpp"

#include <algorithm>

namespace wpp::rulings {

using resolution::ResolutionPair;

namespace {

struct Item {
  bool is_string;
  int idx;
};

// Boundary cycle N_c, S_a, N_b, S_c, N_a, S_b rotated to start at N_target.
std::array<Item, 6> rotated_cycle(int target) {
  const std::array<Item, 6> cycle{{{false, 2}, {true, 0}, {false, 1}, {true, 2}, {false, 0}, {true, 1}}};
  std::size_t at = 0;
  while (cycle[at].is_string || cycle[at].idx != target) ++at;
  std::array<Item, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = cycle[(at + i) % 6];
  return out;
}

std::string connector_label(int i) { return std::string("N_") + char('a' + i); }
std::string string_label(int i, std::size_t j) { return std::string(1, char('A' + i)) + std::to_string(j + 1); }

void append_string(CombinedString& out, const ResolutionPair& R, int i, bool reversed, int target) {
  const auto& S = R.strings[i];
  const std::size_t k = S.length();
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t j = reversed ? k - 1 - t : t;
    out.string.selfints.push_back(S.selfints[j]);
    out.string.classes->push_back((*S.classes)[j]);
    out.labels.push_back(string_label(i, j));
    out.target_index.push_back(i == target ? int(j + 1) : 0);
  }
}

void append_connector(CombinedString& out, const ResolutionPair& R, int i) {
  out.string.selfints.push_back(R.connectors[i].selfint);
  out.string.classes->push_back(R.connectors[i].cls);
  out.labels.push_back(connector_label(i));
  out.target_index.push_back(0);
}

// Length of the shortest prefix that is not negative definite, with the
// target index of its last entry.
std::pair<std::size_t, DeltaSeq> first_indefinite(const CombinedString& S) {
  auto d = strings::delta_sequence(S.string.selfints);
  for (std::size_t l = 1; l <= S.string.length(); ++l) {
    if (d.deltas[l] > 0) continue;
    if (S.target_index[l - 1] == 0) break;
    DeltaSeq prefix{std::vector<Int>(d.deltas.begin(), d.deltas.begin() + l + 1)};
    return {l, std::move(prefix)};
  }
  fail(ErrorCode::NoSignChange, "no truncation ending in the target string is indefinite");
}

}  // namespace

std::string to_string(Role r) { return r == Role::A ? "a" : r == Role::B ? "b" : "c"; }
std::string to_string(RulingCase c) { return c == RulingCase::EmbeddedFiber ? "embedded-fiber" : "unicuspidal"; }

std::pair<CombinedString, CombinedString> combined_strings(const ResolutionPair& R, Role role) {
  for (const auto& s : R.strings)
    if (!s.classes) fail(ErrorCode::MissingClasses, "strings carry no classes");
  const int x = int(role);
  auto r = rotated_cycle(x);
  CombinedString first, second;
  first.string.classes.emplace();
  second.string.classes.emplace();
  append_string(first, R, r[1].idx, false, x);
  append_connector(first, R, r[2].idx);
  append_string(first, R, x, false, x);
  append_string(second, R, r[5].idx, true, x);
  append_connector(second, R, r[4].idx);
  append_string(second, R, x, true, x);
  return {std::move(first), std::move(second)};
}

namespace {

NuIndices nu_of(const CombinedString& sa, const CombinedString& sb) {
  NuIndices out;
  auto [ka, da] = first_indefinite(sa);
  auto [kb, db] = first_indefinite(sb);
  out.k_a = ka;
  out.k_b = kb;
  out.nu_a = std::size_t(sa.target_index[ka - 1]);
  out.nu_b = std::size_t(sb.target_index[kb - 1]);
  out.deltas_a = std::move(da);
  out.deltas_b = std::move(db);
  return out;
}

}  // namespace

NuIndices nu_indices(const ResolutionPair& R, Role role) {
  auto [sa, sb] = combined_strings(R, role);
  return nu_of(sa, sb);
}

RulingData ruling(const ResolutionPair& R, Role role) {
  const int x = int(role);
  auto [sa, sb] = combined_strings(R, role);
  auto nu = nu_of(sa, sb);
  const auto& L = R.lattice;
  auto fa = strings::fiber_class(L, sa.string, nu.k_a);
  auto fb = strings::fiber_class(L, sb.string, nu.k_b);
  auto violated = [&](const std::string& what) {
    fail(ErrorCode::LemmaViolated, "ruling (" + to_string(role) + "): " + what);
  };
  if (!fa.pq || !fb.pq) violated("truncation is not at a sign change");

  RulingData rd;
  rd.role = role;
  rd.nu_a = nu.nu_a;
  rd.nu_b = nu.nu_b;
  rd.k_a = nu.k_a;
  rd.k_b = nu.k_b;
  rd.deltas_a = std::move(nu.deltas_a);
  rd.deltas_b = std::move(nu.deltas_b);
  rd.F = fa.F;
  std::tie(rd.pa, rd.qa) = *fa.pq;
  std::tie(rd.pb, rd.qb) = *fb.pq;
  rd.selfint = fa.square;
  rd.k_dot = fa.k_dot;
  rd.area = R.area(rd.F);

  auto r = rotated_cycle(x);
  for (const auto& it : r) {
    if (it.is_string) {
      for (std::size_t j = 0; j < R.strings[it.idx].length(); ++j)
        rd.profile.emplace_back(string_label(it.idx, j), L.pair(rd.F, (*R.strings[it.idx].classes)[j]));
    } else {
      rd.profile.emplace_back(connector_label(it.idx), L.pair(rd.F, R.connectors[it.idx].cls));
    }
  }

  // Lattice identities hold for every role.
  if (!(fa.F == fb.F)) violated("F_a and F_b differ");
  if (rd.selfint != rd.pa * rd.qa) violated("F^2 differs from p*q");
  if (rd.k_dot != -rd.pa - rd.qa - 1) violated("K.F differs from -p-q-1");
  if (sgn(rd.area) <= 0) violated("F has non-positive area");
  if (gcd(rd.pa, rd.qa) != 1) violated("(p, q) not coprime");

  const std::size_t gap = rd.nu_b > rd.nu_a ? rd.nu_b - rd.nu_a : 0;
  if (gap == 2 && rd.pa == 0 && rd.qa == 1 && rd.pb == 0 && rd.qb == 1) {
    rd.kind = RulingCase::EmbeddedFiber;
    rd.meet_component = rd.nu_a + 1;
  } else if (gap == 1 && rd.pa == rd.qb && rd.qa == rd.pb) {
    rd.kind = RulingCase::Unicuspidal;
    rd.cusp_location = std::make_pair(rd.nu_a, rd.nu_b);
  } else {
    violated("nu_b - nu_a = " + std::to_string(long(rd.nu_b) - long(rd.nu_a)) + " with (p_a,q_a,p_b,q_b) = (" +
             wpp::to_string(rd.pa) + "," + wpp::to_string(rd.qa) + "," + wpp::to_string(rd.pb) + "," +
             wpp::to_string(rd.qb) + ")");
  }

  if (role == Role::C) {
    const auto nc = R.connectors[2].selfint;
    if ((nc >= 0) != (rd.kind == RulingCase::EmbeddedFiber) || (nc == -1) != (rd.kind == RulingCase::Unicuspidal))
      violated("case split does not match [N_c]^2 = " + std::to_string(nc));
  }
  // Profile: p at C_{nu_a}, q at C_{nu_a+1}, 1 at the far connector, 0 elsewhere.
  const std::string far = connector_label(x);
  for (const auto& [label, v] : rd.profile) {
    Int want = 0;
    if (label == far)
      want = 1;
    else if (label == string_label(x, rd.nu_a - 1))
      want = rd.pa;
    else if (label == string_label(x, rd.nu_a))
      want = rd.qa;
    if (v != want) violated("F." + label + " = " + wpp::to_string(v) + ", expected " + wpp::to_string(want));
  }
  return rd;
}

RulingResolution ruling_resolution(const ResolutionPair& R, const RulingData& rd) {
  if (rd.kind != RulingCase::Unicuspidal) fail(ErrorCode::Precondition, "ruling has no cusp to resolve");
  auto sa = combined_strings(R, rd.role).first;
  std::vector<strings::Component> comps;
  for (std::size_t i = 0; i < sa.string.length(); ++i) comps.push_back({(*sa.string.classes)[i], sa.labels[i]});
  // The remaining boundary components follow the chain.
  const int x = int(rd.role);
  auto r = rotated_cycle(x);
  comps.push_back({R.connectors[r[0].idx].cls, connector_label(r[0].idx)});
  comps.push_back({R.connectors[r[4].idx].cls, connector_label(r[4].idx)});
  for (std::size_t j = 0; j < R.strings[r[5].idx].length(); ++j)
    comps.push_back({(*R.strings[r[5].idx].classes)[j], string_label(r[5].idx, j)});
  std::vector<std::size_t> chain(sa.string.length());
  for (std::size_t i = 0; i < chain.size(); ++i) chain[i] = i;
  auto D = strings::DivisorConfig::from_classes(R.lattice, std::move(comps));

  RulingResolution out;
  out.fiber = strings::resolution_fiber_class(D, chain, rd.k_a);
  out.blowups = out.fiber.weights.m.size();
  const auto& Lt = out.fiber.config.lattice;
  out.square = Lt.square(out.fiber.F_tilde);
  out.k_dot = Lt.k_dot(out.fiber.F_tilde);
  return out;
}

}  // namespace wpp::rulings
