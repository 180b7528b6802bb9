#include "wpp/strings.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <set>

namespace wpp::strings {

bool OrientedString::is_hj() const {
  return std::all_of(selfints.begin(), selfints.end(), [](std::int64_t s) { return s <= -2; });
}

OrientedString OrientedString::reversed() const {
  OrientedString r = *this;
  std::reverse(r.selfints.begin(), r.selfints.end());
  if (r.classes) std::reverse(r.classes->begin(), r.classes->end());
  return r;
}

IntMatrix negative_intersection_matrix(std::span<const std::int64_t> s) {
  const std::size_t n = s.size();
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = -static_cast<long>(s[i]);
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

DeltaSeq delta_sequence(std::span<const std::int64_t> s) {
  DeltaSeq d;
  d.deltas.reserve(s.size() + 1);
  d.deltas.emplace_back(1);
  Int prev = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    Int next = Int(static_cast<long>(-s[l])) * d.deltas.back() - prev;
    prev = d.deltas.back();
    d.deltas.push_back(std::move(next));
  }
  return d;
}

bool is_negative_definite(std::span<const std::int64_t> s) {
  auto d = delta_sequence(s);
  return std::all_of(d.deltas.begin(), d.deltas.end(), [](const Int& x) { return x > 0; });
}

Int xi_invariant(std::span<const std::int64_t> s) {
  Int acc = -3 * static_cast<long>(s.size());
  for (auto x : s) acc -= static_cast<long>(x);
  return acc;
}

// ---------------------------------------------------------------- configs

void DivisorConfig::refresh() {
  const std::size_t n = components.size();
  adjacency.assign(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      adjacency[i][j] = adjacency[j][i] = lattice.pair(components[i].cls, components[j].cls);
}

DivisorConfig DivisorConfig::from_string(std::span<const std::int64_t> s, const std::string& label) {
  const std::size_t n = s.size();
  IntMatrix g(n, std::vector<Int>(n, 0));
  std::vector<Int> kp(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = static_cast<long>(s[i]);
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    kp[i] = -2 - static_cast<long>(s[i]);
  }
  std::vector<Component> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back({HClass::unit(n, i), label + std::to_string(i + 1)});
  return from_classes(Lattice::general(std::move(g), std::move(kp), std::nullopt), std::move(comps));
}

DivisorConfig DivisorConfig::from_classes(Lattice L, std::vector<Component> comps) {
  DivisorConfig D;
  D.lattice = std::move(L);
  D.components = std::move(comps);
  D.refresh();
  return D;
}

std::int64_t DivisorConfig::selfint(std::size_t i) const { return to_i64(adjacency.at(i).at(i)); }

SelfInts DivisorConfig::selfints() const {
  SelfInts s;
  for (std::size_t i = 0; i < size(); ++i) s.push_back(selfint(i));
  return s;
}

std::vector<std::size_t> DivisorConfig::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && adjacency[i][j] != 0) out.push_back(j);
  return out;
}

OrientedString DivisorConfig::as_string() const {
  OrientedString s;
  s.selfints = selfints();
  std::vector<HClass> cls;
  for (const auto& c : components) cls.push_back(c.cls);
  s.classes = std::move(cls);
  return s;
}

namespace {

void check_index(const DivisorConfig& D, std::size_t i) {
  if (i >= D.size()) fail(ErrorCode::BadIndex, "component index " + std::to_string(i) + " out of range");
}

// Lattice blown up once with every component class extended; returns e.
HClass grow(DivisorConfig& D) {
  D.lattice.blow_up();
  const std::size_t r = D.lattice.rank();
  for (auto& c : D.components) c.cls.coeffs.emplace_back(0);
  return HClass::unit(r, r - 1);
}

// The new e is orthogonal to the old lattice with e^2 = -1, so components in
// `hit` (each losing e once) pair one less with each other, and e itself
// pairs 1 with them.
void lose_e(DivisorConfig& D, const HClass& e, const std::vector<std::size_t>& hit) {
  for (auto i : hit) D.components[i].cls -= e;
  for (auto i : hit)
    for (auto j : hit) D.adjacency[i][j] -= 1;
}

void insert_e(DivisorConfig& D, const HClass& e, std::size_t pos, const std::vector<std::size_t>& hit) {
  const std::size_t m = D.components.size();
  std::vector<Int> row(m + 1, 0);
  for (auto i : hit) row[i < pos ? i : i + 1] = 1;
  row[pos] = -1;
  for (std::size_t i = 0; i < m; ++i) D.adjacency[i].insert(D.adjacency[i].begin() + static_cast<long>(pos), row[i < pos ? i : i + 1]);
  D.adjacency.insert(D.adjacency.begin() + static_cast<long>(pos), std::move(row));
  D.components.insert(D.components.begin() + static_cast<long>(pos), Component{e, "e" + std::to_string(e.rank())});
}

}  // namespace

namespace {

void toric_blowup_in_place(DivisorConfig& D, std::size_t i, std::size_t j) {
  check_index(D, i);
  check_index(D, j);
  if (i == j || D.adjacency[i][j] != 1)
    fail(ErrorCode::NotAdjacent, "components " + std::to_string(i) + " and " + std::to_string(j) + " do not meet once");
  HClass e = grow(D);
  lose_e(D, e, {i, j});
  std::size_t pos = (j == i + 1) ? j : (i == j + 1) ? i : D.components.size();
  insert_e(D, e, pos, {i, j});
}

}  // namespace

DivisorConfig toric_blowup(const DivisorConfig& D, std::size_t i, std::size_t j) {
  DivisorConfig out = D;
  toric_blowup_in_place(out, i, j);
  return out;
}

DivisorConfig half_toric_blowup(const DivisorConfig& D, std::size_t i) {
  check_index(D, i);
  DivisorConfig out = D;
  HClass e = grow(out);
  lose_e(out, e, {i});
  insert_e(out, e, (i == 0) ? 0 : i + 1, {i});
  return out;
}

DivisorConfig non_toric_blowup(const DivisorConfig& D, std::size_t i) {
  check_index(D, i);
  DivisorConfig out = D;
  HClass e = grow(out);
  lose_e(out, e, {i});
  return out;
}

DivisorConfig exterior_blowup(const DivisorConfig& D, ExteriorMode mode) {
  DivisorConfig out = D;
  HClass e = grow(out);
  if (mode == ExteriorMode::TotalTransform) insert_e(out, e, out.components.size(), {});
  return out;
}

BlowdownResult blowdown(const DivisorConfig& D, std::size_t i) {
  check_index(D, i);
  const HClass& E = D.components[i].cls;
  if (D.adjacency[i][i] != -1 || D.lattice.k_dot(E) != -1)
    fail(ErrorCode::NotBlowdownable, "component " + std::to_string(i) + " is not an exceptional sphere");
  auto nb = D.neighbors(i);
  auto bd = homlat::blow_down(D.lattice, E);
  std::vector<Component> comps;
  for (std::size_t j = 0; j < D.size(); ++j) {
    if (j == i) continue;
    comps.push_back({bd.project(D.lattice, E, D.components[j].cls), D.components[j].label});
  }
  BlowdownResult r{DivisorConfig::from_classes(std::move(bd.lattice), std::move(comps)),
                   nb.size() == 2 ? BlowdownKind::Toric : BlowdownKind::HalfToric};
  return r;
}

// ---------------------------------------------------------------- fiber classes

FiberClass fiber_class(const Lattice& L, const OrientedString& S, std::size_t k) {
  if (!S.classes) fail(ErrorCode::MissingClasses, "fiber class needs component classes");
  const std::size_t n = S.length();
  if (k < 1 || k > n) fail(ErrorCode::BadIndex, "k must lie in 1..n");
  const auto& cls = *S.classes;
  FiberClass out;
  out.deltas = delta_sequence(S.selfints);
  const auto& d = out.deltas.deltas;
  out.F = HClass(L.rank());
  for (std::size_t i = 0; i < k; ++i) out.F += d[i] * cls[i];
  out.square = L.square(out.F);
  out.k_dot = L.k_dot(out.F);

  const Int& dk = d[k - 1];
  const Int& dk1 = d[k];
  bool ok = out.square == -dk * dk1 && out.k_dot == -dk + dk1 - 1;
  for (std::size_t i = 0; i < n && ok; ++i) {
    Int want = (i + 1 == k) ? Int(-dk1) : (i == k) ? dk : Int(0);
    if (L.pair(out.F, cls[i]) != want) ok = false;
  }
  if (!ok) fail(ErrorCode::LemmaViolated, "fiber class identities fail; classes do not match the string");
  if (dk > 0 && dk1 <= 0) out.pq = std::make_pair(Int(-dk1), dk);
  return out;
}

ResolvedFiber resolution_fiber_class(const DivisorConfig& D, const std::vector<std::size_t>& chain, std::size_t k) {
  const std::size_t n = chain.size();
  if (k < 1 || k > n) fail(ErrorCode::BadIndex, "k must lie in 1..n");
  for (auto c : chain) check_index(D, c);

  // Reorder so the string occupies positions 0..n-1; other components follow.
  std::vector<std::size_t> order(chain);
  std::vector<char> used(D.size(), 0);
  for (auto c : chain) used[c] = 1;
  for (std::size_t j = 0; j < D.size(); ++j)
    if (!used[j]) order.push_back(j);
  DivisorConfig cur;
  cur.lattice = D.lattice;
  cur.adjacency.assign(order.size(), std::vector<Int>(order.size()));
  for (std::size_t x = 0; x < order.size(); ++x) {
    cur.components.push_back(D.components[order[x]]);
    for (std::size_t y = 0; y < order.size(); ++y) cur.adjacency[x][y] = D.adjacency[order[x]][order[y]];
  }

  OrientedString S;
  std::vector<HClass> cls;
  for (std::size_t i = 0; i < n; ++i) {
    S.selfints.push_back(cur.selfint(i));
    cls.push_back(cur.components[i].cls);
  }
  S.classes = cls;
  auto deltas = delta_sequence(S.selfints).deltas;
  if (!(deltas[k - 1] > 0 && deltas[k] <= 0))
    fail(ErrorCode::NotAtSignChange, "Delta_k > 0 >= Delta_{k+1} fails at k = " + std::to_string(k));
  FiberClass fc = fiber_class(cur.lattice, S, k);
  const Int p = fc.pq->first, q = fc.pq->second;

  ResolvedFiber out;
  out.weights = arith::weight_sequence(p, q);
  const std::size_t L = out.weights.m.size();
  const std::size_t rank0 = cur.lattice.rank();
  std::size_t len = n;
  if (L > 0) {
    if (k == n) fail(ErrorCode::NotAtSignChange, "no node after S_k to blow up");
    // (alpha, beta) = F-pairings with the left and right component at the
    // node being blown up. The side keeping the larger pairing decides
    // whether the next node is left or right of the new component.
    std::vector<std::size_t> cpos;
    std::size_t left = k - 1;
    Int alpha = p, beta = q;
    for (std::size_t i = 0; i < L; ++i) {
      if ((alpha < beta ? alpha : beta) != out.weights.m[i])
        fail(ErrorCode::LemmaViolated, "blowup multiplicities disagree with the weight sequence");
      toric_blowup_in_place(cur, left, left + 1);
      const std::size_t c = left + 1;
      for (auto& x : cpos)
        if (x >= c) ++x;
      cpos.push_back(c);
      ++len;
      if (alpha > beta) {
        alpha -= beta;  // next node: left neighbor and C_i
      } else {
        beta -= alpha;  // next node: C_i and right neighbor
        left = c;
      }
    }
    out.c_index = cpos;
  }
  const std::size_t r = cur.lattice.rank();
  out.F_k = fc.F.extended(r);
  out.F_tilde = out.F_k;
  for (std::size_t i = 0; i < L; ++i) out.F_tilde -= out.weights.m[i] * HClass::unit(r, rank0 + i);
  for (std::size_t i = 0; i < len; ++i) out.chain.push_back(i);
  out.config = std::move(cur);

  // Post-conditions of the resolution pattern.
  const auto& Lt = out.config.lattice;
  bool ok = Lt.square(out.F_tilde) == 0 && Lt.k_dot(out.F_tilde) == -2;
  if (L > 0) {
    for (std::size_t i : out.chain) {
      Int want = (i == out.c_index.back()) ? 1 : 0;
      if (Lt.pair(out.F_tilde, out.config.components[i].cls) != want) ok = false;
    }
  }
  if (!ok) fail(ErrorCode::LemmaViolated, "resolution fiber class post-conditions fail");
  return out;
}

ResolvedFiber resolution_fiber_class(const DivisorConfig& D, std::size_t k) {
  std::vector<std::size_t> chain(D.size());
  for (std::size_t i = 0; i < chain.size(); ++i) chain[i] = i;
  return resolution_fiber_class(D, chain, k);
}

// ---------------------------------------------------------------- Lemma on unit entries

namespace {

SelfInts contract(const SelfInts& s, std::size_t i) {
  SelfInts t;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == i) continue;
    t.push_back(s[j] + ((j + 1 == i || j == i + 1) ? 1 : 0));
  }
  return t;
}

bool units_ok(const SelfInts& s) {
  std::vector<std::size_t> ones;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] == -1) ones.push_back(j);
  if (ones.size() > 2) return false;
  return ones.size() < 2 || ones[1] == ones[0] + 1;
}

}  // namespace

bool adjacent_ones_check(const SelfInts& start) {
  if (std::count(start.begin(), start.end(), -1) != 1)
    fail(ErrorCode::Precondition, "start string must have exactly one -1 entry");
  std::set<SelfInts> seen;
  std::vector<SelfInts> todo{start};
  while (!todo.empty()) {
    SelfInts s = std::move(todo.back());
    todo.pop_back();
    if (!seen.insert(s).second) continue;
    if (!units_ok(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == -1) todo.push_back(contract(s, i));
  }
  return true;
}

}  // namespace wpp::strings
