#include "wpp/error.hpp"
#include "wpp/homlat.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpp::homlat {

using i128 = __int128;

bool in_cremona_orbit(const HClass& E) {
  if (E.rank() == 0) return false;
  if (!E[0].fits_slong_p()) return false;
  long d = E[0].get_si();
  std::vector<long> m;
  for (std::size_t i = 1; i < E.rank(); ++i) {
    if (!E[i].fits_slong_p()) return false;
    m.push_back(-E[i].get_si());
  }
  // Padding by zeros embeds CP^2#n into CP^2#(n+k); orbit membership is unaffected.
  while (m.size() < 3) m.push_back(0);
  while (true) {
    if (d < 0) return false;
    if (d == 0) {
      int units = 0;
      for (long x : m) {
        if (x == -1)
          ++units;
        else if (x != 0)
          return false;
      }
      return units == 1;
    }
    for (long x : m)
      if (x < 0) return false;
    std::partial_sort(m.begin(), m.begin() + 3, m.end(), std::greater<>());
    long delta = d - m[0] - m[1] - m[2];
    if (delta >= 0) return false;
    d += delta;
    for (int i = 0; i < 3; ++i) m[i] += delta;
  }
}

namespace {

// E = (d, c_1..c_n) in CP^2#n coordinates; every constraint is written as
// sum a_i c_i >= base + slope*d.
struct LinCon {
  std::vector<Int> a;
  Int base, slope;
  bool small = false;
  std::vector<long long> a64;
  std::vector<i128> suf, suf2;  // suffix sums of a and a^2
};

constexpr long kSmallCoeff = 1L << 28;
constexpr long kSmallRhs = 1L << 40;

struct Problem {
  std::size_t n = 0;
  long B = 0;
  ExceptionalFilter filter = ExceptionalFilter::Cremona;
  std::vector<LinCon> cons;
};

Problem make_problem(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                     const std::vector<PairingConstraint>& extra) {
  if (opt.coeff_bound < 1) fail(ErrorCode::Precondition, "coeff_bound must be at least 1");
  if (opt.coeff_bound > 1000) fail(ErrorCode::Precondition, "coeff_bound too large");
  if (area.values.size() != n + 1) fail(ErrorCode::RankMismatch, "area form rank mismatch");
  Problem P;
  P.n = n;
  P.B = opt.coeff_bound;
  P.filter = opt.filter;

  for (const auto& pc : extra) {
    if (pc.with.rank() != n + 1) fail(ErrorCode::RankMismatch, "constraint class rank mismatch");
    // E.X = d*x0 - sum c_i x_i >= beta.
    LinCon c;
    c.a.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.a[i] = -pc.with[i + 1];
    c.base = pc.at_least;
    c.slope = -pc.with[0];
    P.cons.push_back(std::move(c));
  }

  // Sums of two or more pairing constraints are implied, and their
  // rearrangement bounds are tighter than the sum of the separate bounds.
  const std::size_t m = P.cons.size();
  if (m >= 2 && m <= 6) {
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (std::popcount(mask) < 2) continue;
      LinCon c;
      c.a.assign(n, 0);
      c.base = 0;
      c.slope = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (!(mask >> k & 1)) continue;
        for (std::size_t i = 0; i < n; ++i) c.a[i] += P.cons[k].a[i];
        c.base += P.cons[k].base;
        c.slope += P.cons[k].slope;
      }
      P.cons.push_back(std::move(c));
    }
  }

  // Area d*w0 + sum w_i c_i, scaled to integers.
  Int L = 1;
  for (const auto& v : area.values) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den().get_mpz_t());
  if (opt.area_cap) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), opt.area_cap->get_den().get_mpz_t());
  std::vector<Int> W(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational s = area.values[i] * Rational(L);
    W[i] = s.get_num();
  }
  {
    LinCon c;  // area > 0
    c.a.assign(W.begin() + 1, W.end());
    c.base = 1;
    c.slope = -W[0];
    P.cons.push_back(std::move(c));
  }
  if (opt.area_cap) {
    LinCon c;  // area <= cap
    c.a.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.a[i] = -W[i + 1];
    Rational capL = *opt.area_cap * Rational(L);
    c.base = -capL.get_num();
    c.slope = W[0];
    P.cons.push_back(std::move(c));
  }

  for (auto& c : P.cons) {
    c.small = true;
    for (const auto& x : c.a)
      if (abs(x) > kSmallCoeff) c.small = false;
    if (!c.small) continue;
    c.a64.resize(n);
    c.suf.assign(n + 1, 0);
    c.suf2.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) c.a64[i] = c.a[i].get_si();
    for (std::size_t i = n; i-- > 0;) {
      c.suf[i] = c.suf[i + 1] + c.a64[i];
      c.suf2[i] = c.suf2[i + 1] + static_cast<i128>(c.a64[i]) * c.a64[i];
    }
  }
  return P;
}

bool satisfies(const Problem& P, long d, const std::vector<long>& c) {
  for (const auto& con : P.cons) {
    Int lhs = 0;
    for (std::size_t i = 0; i < P.n; ++i)
      if (c[i] != 0) lhs += con.a[i] * c[i];
    if (lhs < con.base + con.slope * d) return false;
  }
  return true;
}

HClass make_class(long d, const std::vector<long>& c) {
  HClass E(c.size() + 1);
  E[0] = d;
  for (std::size_t i = 0; i < c.size(); ++i) E[i + 1] = c[i];
  return E;
}

bool at_bound(const Problem& P, long d, const std::vector<long>& c) {
  if (std::labs(d) == P.B) return true;
  for (long x : c)
    if (std::labs(x) == P.B) return true;
  return false;
}

struct Search {
  const Problem& P;
  long d;
  std::vector<long> c;
  std::vector<i128> rhs;       // per constraint, 0 if not small
  std::vector<char> usable;    // constraint pruning enabled for this d
  std::vector<std::vector<i128>> partial;  // partial[k][j] = sum_{i<k} a_i c_i
  std::vector<HClass> out;
  bool touched = false;
  long lo, hi;  // coordinate range for c_i

  Search(const Problem& p, long dd) : P(p), d(dd), c(p.n, 0), lo(-p.B), hi(p.B) {
    // Orbit members have d >= 0, are E_i when d = 0, and have all c_i <= 0 otherwise.
    if (P.filter == ExceptionalFilter::Cremona) {
      if (d == 0) {
        lo = 0;
        hi = 1;
      } else {
        hi = 0;
      }
    }
    rhs.assign(P.cons.size(), 0);
    usable.assign(P.cons.size(), 0);
    for (std::size_t j = 0; j < P.cons.size(); ++j) {
      const auto& con = P.cons[j];
      if (!con.small) continue;
      Int r = con.base + con.slope * d;
      if (abs(r) > kSmallRhs) continue;
      rhs[j] = r.get_si();
      usable[j] = 1;
    }
    partial.assign(P.n + 1, std::vector<i128>(P.cons.size(), 0));
  }

  bool feasible(std::size_t k, long long S, long long Q) const {
    // Coordinates k..n-1 remain, with sum S and square sum Q.
    const long long r = static_cast<long long>(P.n - k);
    if (r == 0) return S == 0 && Q == 0;
    if (Q < 0) return false;
    if (((S - Q) & 1) != 0) return false;
    if (S * S > r * Q) return false;
    if (S < r * lo || S > r * hi) return false;
    if (lo >= 0 || hi <= 0) {
      // One-signed coordinates: |x| <= x^2 <= M|x|.
      const long long aS = std::llabs(S), M = std::max(std::labs(lo), std::labs(hi));
      if (Q < aS || Q > M * aS) return false;
    }
    for (std::size_t j = 0; j < P.cons.size(); ++j) {
      if (!usable[j]) continue;
      const auto& con = P.cons[j];
      i128 need = rhs[j] - partial[k][j];
      i128 A = con.suf[k], A2 = con.suf2[k];
      i128 T = static_cast<i128>(r) * need - A * S;
      if (T <= 0) continue;
      i128 lhs = (static_cast<i128>(r) * A2 - A * A) * (static_cast<i128>(r) * Q - static_cast<i128>(S) * S);
      if (T * T > lhs) return false;
    }
    return true;
  }

  void leaf() {
    if (!satisfies(P, d, c)) return;
    HClass E = make_class(d, c);
    if (P.filter == ExceptionalFilter::Cremona && !in_cremona_orbit(E)) return;
    if (at_bound(P, d, c)) touched = true;
    out.push_back(std::move(E));
  }

  void dfs(std::size_t k, long long S, long long Q) {
    if (k + 1 == P.n) {
      long long x = S;
      if (x * x != Q || x < lo || x > hi) return;
      c[k] = static_cast<long>(x);
      leaf();
      return;
    }
    long long lim = P.B;
    while (lim * lim > Q) --lim;
    for (long long x = std::max<long long>(-lim, lo); x <= std::min<long long>(lim, hi); ++x) {
      c[k] = static_cast<long>(x);
      for (std::size_t j = 0; j < P.cons.size(); ++j)
        if (usable[j]) partial[k + 1][j] = partial[k][j] + static_cast<i128>(P.cons[j].a64[k]) * x;
      if (!feasible(k + 1, S - x, Q - x * x)) continue;
      dfs(k + 1, S - x, Q - x * x);
    }
    c[k] = 0;
  }

  void run() {
    if (P.n == 0) return;  // d^2 + 1 = 0 has no solution
    if (P.filter == ExceptionalFilter::Cremona && d < 0) return;
    const long long S = 1 - 3LL * d, Q = static_cast<long long>(d) * d + 1;
    if (!feasible(0, S, Q)) return;
    dfs(0, S, Q);
  }
};

// Multiplicities m (descending, with d) of orbit classes with 1 <= d <= B, up
// to permutation. Every orbit class with d > 0 reduces to some E_i by Cremona
// steps that strictly lower d, so reversing those steps from H - E_1 - E_2
// reaches every type without leaving the degree bound.
struct OrbitType {
  long d;
  std::vector<long> m;
  bool operator<(const OrbitType& o) const { return d != o.d ? d < o.d : m > o.m; }
};

std::vector<OrbitType> orbit_types(std::size_t N, long B) {
  std::set<std::pair<long, std::vector<long>>> seen;
  std::vector<OrbitType> queue;
  std::vector<long> m0(N, 0);
  m0[0] = m0[1] = 1;
  queue.push_back({1, m0});
  seen.insert({1, m0});
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const OrbitType t = queue[q];
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        for (std::size_t k = j + 1; k < N; ++k) {
          const long delta = t.d - t.m[i] - t.m[j] - t.m[k];
          if (delta <= 0 || t.d + delta > B) continue;
          OrbitType u = t;
          u.d += delta;
          u.m[i] += delta;
          u.m[j] += delta;
          u.m[k] += delta;
          std::sort(u.m.begin(), u.m.end(), std::greater<>());
          if (seen.insert({u.d, u.m}).second) queue.push_back(std::move(u));
        }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Places the multiset of one orbit type onto the n coordinates, pruning each
// small constraint by its rearrangement-inequality maximum over the rest.
struct Placement {
  const Problem& P;
  long d;
  std::vector<long> count;  // remaining multiplicity counts, indexed by value
  std::vector<long> c;
  std::vector<i128> rhs;
  std::vector<char> usable;
  // sorted[j][k]: coefficients a_k..a_{n-1} of constraint j, descending
  const std::vector<std::vector<std::vector<long long>>>& sorted;
  std::vector<i128> partial;
  std::vector<HClass> out;
  bool touched = false;

  Placement(const Problem& p, const OrbitType& t, const std::vector<std::vector<std::vector<long long>>>& srt)
      : P(p), d(t.d), c(p.n, 0), sorted(srt) {
    count.assign(t.m.front() + 1, 0);
    for (std::size_t i = 0; i < P.n; ++i) ++count[t.m[i]];
    rhs.assign(P.cons.size(), 0);
    usable.assign(P.cons.size(), 0);
    for (std::size_t j = 0; j < P.cons.size(); ++j) {
      const auto& con = P.cons[j];
      if (!con.small) continue;
      Int r = con.base + con.slope * d;
      if (abs(r) > kSmallRhs) continue;
      rhs[j] = r.get_si();
      usable[j] = 1;
    }
    partial.assign(P.cons.size(), 0);
  }

  bool feasible(std::size_t k) const {
    for (std::size_t j = 0; j < P.cons.size(); ++j) {
      if (!usable[j]) continue;
      // Largest coefficients meet the largest remaining c = -m, i.e. smallest m.
      const auto& a = sorted[j][k];
      i128 best = 0;
      std::size_t pos = 0;
      for (std::size_t v = 0; v < count.size(); ++v)
        for (long r = 0; r < count[v]; ++r) best -= static_cast<i128>(a[pos++]) * static_cast<long long>(v);
      if (partial[j] + best < rhs[j]) return false;
    }
    return true;
  }

  void dfs(std::size_t k) {
    if (k == P.n) {
      if (!satisfies(P, d, c)) return;
      if (at_bound(P, d, c)) touched = true;
      out.push_back(make_class(d, c));
      return;
    }
    for (std::size_t v = 0; v < count.size(); ++v) {
      if (count[v] == 0) continue;
      --count[v];
      c[k] = -static_cast<long>(v);
      for (std::size_t j = 0; j < P.cons.size(); ++j)
        if (usable[j]) partial[j] += static_cast<i128>(P.cons[j].a64[k]) * c[k];
      if (feasible(k + 1)) dfs(k + 1);
      for (std::size_t j = 0; j < P.cons.size(); ++j)
        if (usable[j]) partial[j] -= static_cast<i128>(P.cons[j].a64[k]) * c[k];
      ++count[v];
    }
    c[k] = 0;
  }
};

struct OrbitPlan {
  std::vector<OrbitType> types;
  std::vector<std::vector<std::vector<long long>>> sorted;
};

OrbitPlan orbit_plan(const Problem& P) {
  OrbitPlan plan;
  const std::size_t N = std::max<std::size_t>(P.n, 3);
  for (auto& t : orbit_types(N, P.B)) {
    // Padding coordinates beyond n must carry multiplicity 0.
    if (std::any_of(t.m.begin() + P.n, t.m.end(), [](long x) { return x != 0; })) continue;
    if (t.m.front() > P.B) continue;
    t.m.resize(P.n);
    plan.types.push_back(std::move(t));
  }
  plan.sorted.resize(P.cons.size());
  for (std::size_t j = 0; j < P.cons.size(); ++j) {
    if (!P.cons[j].small) continue;
    plan.sorted[j].resize(P.n + 1);
    for (std::size_t k = 0; k <= P.n; ++k) {
      std::vector<long long> a(P.cons[j].a64.begin() + k, P.cons[j].a64.end());
      std::sort(a.begin(), a.end(), std::greater<>());
      plan.sorted[j][k] = std::move(a);
    }
  }
  return plan;
}

// The d = 0 members of the orbit are the E_i themselves.
void unit_classes(const Problem& P, std::vector<HClass>& out, bool& touched) {
  std::vector<long> c(P.n, 0);
  for (std::size_t i = 0; i < P.n; ++i) {
    c[i] = 1;
    if (satisfies(P, 0, c)) {
      out.push_back(make_class(0, c));
      if (P.B == 1) touched = true;
    }
    c[i] = 0;
  }
}

ExceptionalSet finish(std::vector<std::vector<HClass>>& per_d, const std::vector<char>& touched) {
  ExceptionalSet res;
  for (std::size_t i = 0; i < per_d.size(); ++i) {
    for (auto& e : per_d[i]) res.classes.push_back(std::move(e));
    if (touched[i]) res.possibly_incomplete = true;
  }
  std::sort(res.classes.begin(), res.classes.end());
  return res;
}

}  // namespace

namespace detail {

ExceptionalSet enumerate_cp2_search(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                    const std::vector<PairingConstraint>& extra) {
  const Problem P = make_problem(n, area, opt, extra);
  const long count = 2 * P.B + 1;
  std::vector<std::vector<HClass>> per_d(count);
  std::vector<char> touched(count, 0);
  for (long i = 0; i < count; ++i) {
    Search s(P, i - P.B);
    s.run();
    per_d[i] = std::move(s.out);
    touched[i] = s.touched;
  }
  return finish(per_d, touched);
}

ExceptionalSet enumerate_cp2_serial(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                    const std::vector<PairingConstraint>& extra) {
  if (opt.filter != ExceptionalFilter::Cremona) return enumerate_cp2_search(n, area, opt, extra);
  const Problem P = make_problem(n, area, opt, extra);
  if (P.n == 0) return {};
  const OrbitPlan plan = orbit_plan(P);
  const std::size_t count = plan.types.size();
  std::vector<std::vector<HClass>> per(count + 1);
  std::vector<char> touched(count + 1, 0);
  bool t0 = false;
  unit_classes(P, per[count], t0);
  touched[count] = t0;
  for (std::size_t i = 0; i < count; ++i) {
    Placement s(P, plan.types[i], plan.sorted);
    if (s.feasible(0)) s.dfs(0);
    per[i] = std::move(s.out);
    touched[i] = s.touched;
  }
  return finish(per, touched);
}

ExceptionalSet enumerate_cp2_parallel(std::size_t n, const AreaForm& area, const ExceptionalOptions& opt,
                                      const std::vector<PairingConstraint>& extra) {
  const Problem P = make_problem(n, area, opt, extra);
  if (opt.filter != ExceptionalFilter::Cremona) {
    const long count = 2 * P.B + 1;
    std::vector<std::vector<HClass>> per_d(count);
    std::vector<char> touched(count, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      Search s(P, i - P.B);
      s.run();
      per_d[i] = std::move(s.out);
      touched[i] = s.touched;
    }
    return finish(per_d, touched);
  }
  if (P.n == 0) return {};
  const OrbitPlan plan = orbit_plan(P);
  const long count = static_cast<long>(plan.types.size());
  std::vector<std::vector<HClass>> per(count + 1);
  std::vector<char> touched(count + 1, 0);
  bool t0 = false;
  unit_classes(P, per[count], t0);
  touched[count] = t0;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    Placement s(P, plan.types[i], plan.sorted);
    if (s.feasible(0)) s.dfs(0);
    per[i] = std::move(s.out);
    touched[i] = s.touched;
  }
  return finish(per, touched);
}

}  // namespace detail

ExceptionalSet enumerate_exceptional(const Lattice& L, const AreaForm& area, const ExceptionalOptions& opt,
                                     const std::vector<PairingConstraint>& extra) {
  if (area.values.size() != L.rank()) fail(ErrorCode::RankMismatch, "area form rank mismatch");
  auto chart = projective_chart(L);
  if (!chart) {
    bool even = true;
    for (std::size_t i = 0; i < L.rank(); ++i)
      if (L.entry(i, i) % 2 != 0) even = false;
    if (even) return {};  // no class of odd square
    fail(ErrorCode::Precondition, "exceptional enumeration needs a CP^2 or Hirzebruch basis");
  }
  std::vector<PairingConstraint> ex;
  ex.reserve(extra.size());
  for (const auto& pc : extra) ex.push_back({chart->to_target(pc.with), pc.at_least});
  const AreaForm ta = chart->area_to_target(area);
  const std::size_t n = chart->target.rank() - 1;
  ExceptionalSet res = opt.parallel ? detail::enumerate_cp2_parallel(n, ta, opt, ex)
                                    : detail::enumerate_cp2_serial(n, ta, opt, ex);
  if (L.tag() != BasisTag::ProjectivePlane) {
    for (auto& e : res.classes) e = chart->from_target(e);
    std::sort(res.classes.begin(), res.classes.end());
  }
  return res;
}

namespace {
HClass total(const Lattice& L, const std::vector<HClass>& comp) {
  HClass t(L.rank());
  for (const auto& x : comp) t += x;
  return t;
}
}  // namespace

ExceptionalSet log_exceptional(const Lattice& L, const AreaForm& area, const ComponentClasses& D,
                               const ExceptionalOptions& opt) {
  std::vector<PairingConstraint> cons;
  for (const auto& comp : D) cons.push_back({total(L, comp), 0});
  return enumerate_exceptional(L, area, opt, cons);
}

ExceptionalSet connecting_log_exceptional(const Lattice& L, const AreaForm& area, const ComponentClasses& D,
                                          std::size_t i, std::size_t j, const ExceptionalOptions& opt) {
  if (i == j) fail(ErrorCode::Precondition, "connecting classes need two distinct components");
  if (i >= D.size() || j >= D.size()) fail(ErrorCode::BadIndex, "component index out of range");
  std::vector<PairingConstraint> cons;
  for (std::size_t a = 0; a < D.size(); ++a) cons.push_back({total(L, D[a]), (a == i || a == j) ? 1 : 0});
  return enumerate_exceptional(L, area, opt, cons);
}

Gap exceptional_gap(const Lattice& L, const AreaForm& area, const ComponentClasses& D, std::size_t i,
                    std::size_t j, const ExceptionalOptions& opt) {
  ExceptionalSet s = connecting_log_exceptional(L, area, D, i, j, opt);
  Gap g;
  g.value = 0;
  g.lower_bound_only = s.possibly_incomplete;
  for (const auto& e : s.classes) {
    Rational a = area(e);
    if (a > g.value) g.value = a;
  }
  g.witnesses = std::move(s.classes);
  return g;
}

}  // namespace wpp::homlat
