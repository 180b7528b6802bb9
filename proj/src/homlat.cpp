#include "wpp/homlat.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <climits>

namespace wpp::homlat {

// ---------------------------------------------------------------- matrices

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) fail(ErrorCode::Precondition, "singular matrix");
    std::swap(a[k], a[p]);
    Rational piv = a[k][k];
    for (auto& x : a[k]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  IntMatrix inv(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1) fail(ErrorCode::Precondition, "matrix is not unimodular");
      inv[i][j] = a[i][n + j].get_num();
    }
  return inv;
}

// ---------------------------------------------------------------- HClass

HClass::HClass(std::initializer_list<long> c) {
  coeffs.reserve(c.size());
  for (long v : c) coeffs.emplace_back(v);
}

HClass HClass::unit(std::size_t rank, std::size_t i) {
  HClass h(rank);
  h.coeffs.at(i) = 1;
  return h;
}

HClass& HClass::operator+=(const HClass& o) {
  if (o.rank() != rank()) fail(ErrorCode::RankMismatch, "adding classes of different rank");
  for (std::size_t i = 0; i < rank(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

HClass& HClass::operator-=(const HClass& o) {
  if (o.rank() != rank()) fail(ErrorCode::RankMismatch, "subtracting classes of different rank");
  for (std::size_t i = 0; i < rank(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

HClass operator*(const Int& k, HClass a) {
  for (auto& x : a.coeffs) x *= k;
  return a;
}

HClass HClass::operator-() const {
  HClass r = *this;
  for (auto& x : r.coeffs) x = -x;
  return r;
}

HClass HClass::extended(std::size_t r) const {
  HClass out = *this;
  if (r < rank()) fail(ErrorCode::RankMismatch, "cannot shrink a class");
  out.coeffs.resize(r, 0);
  return out;
}

std::string to_string(const HClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (i) s += ",";
    s += c[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- Lattice

IntMatrix Lattice::gram() const {
  IntMatrix g(rank(), std::vector<Int>(rank(), 0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (const auto& [j, v] : rows_[i]) g[i][j] = v;
  return g;
}

Int Lattice::entry(std::size_t i, std::size_t j) const {
  for (const auto& [c, v] : rows_[i])
    if (c == j) return v;
  return 0;
}

Lattice Lattice::projective_plane(std::size_t n) {
  Lattice L;
  L.rows_.resize(n + 1);
  L.rows_[0] = {{0, Int(1)}};
  for (std::size_t i = 1; i <= n; ++i) L.rows_[i] = {{i, Int(-1)}};
  HClass K(n + 1);
  K[0] = -3;
  for (std::size_t i = 1; i <= n; ++i) K[i] = 1;
  L.k_pair_.assign(n + 1, -1);
  L.k_pair_[0] = -3;
  L.k_class_ = K;
  L.tag_ = BasisTag::ProjectivePlane;
  return L;
}

Lattice Lattice::hirzebruch(long k, std::size_t m) {
  if (k < 0) fail(ErrorCode::Precondition, "Hirzebruch index must be non-negative");
  Lattice L;
  const std::size_t r = m + 2;
  L.rows_.resize(r);
  L.rows_[0] = {{1, Int(1)}};
  L.rows_[1] = {{0, Int(1)}};
  if (k != 0) L.rows_[1].emplace_back(1, Int(-k));
  for (std::size_t i = 2; i < r; ++i) L.rows_[i] = {{i, Int(-1)}};
  HClass K(r);
  K[0] = -(k + 2);
  K[1] = -2;
  for (std::size_t i = 2; i < r; ++i) K[i] = 1;
  // K.f = -2, K.s = k - 2, K.e = -1.
  L.k_pair_.assign(r, -1);
  L.k_pair_[0] = -2;
  L.k_pair_[1] = k - 2;
  L.k_class_ = K;
  L.tag_ = BasisTag::Hirzebruch;
  L.hirz_k_ = k;
  return L;
}

Lattice Lattice::general(IntMatrix gram, std::vector<Int> k_pair, std::optional<HClass> k_class) {
  const std::size_t r = gram.size();
  for (const auto& row : gram)
    if (row.size() != r) fail(ErrorCode::RankMismatch, "Gram matrix is not square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) fail(ErrorCode::Precondition, "Gram matrix is not symmetric");
  if (k_pair.size() != r) fail(ErrorCode::RankMismatch, "K pairing has wrong length");
  if (k_class && k_class->rank() != r) fail(ErrorCode::RankMismatch, "K class has wrong length");
  Lattice L;
  L.rows_.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (gram[i][j] != 0) L.rows_[i].emplace_back(j, gram[i][j]);
  L.k_pair_ = std::move(k_pair);
  L.k_class_ = std::move(k_class);
  return L;
}

const HClass& Lattice::K() const {
  if (!k_class_) fail(ErrorCode::Precondition, "canonical class unknown for this lattice");
  return *k_class_;
}

Int Lattice::pair(const HClass& a, const HClass& b) const {
  if (a.rank() != rank() || b.rank() != rank())
    fail(ErrorCode::RankMismatch, "class rank " + std::to_string(a.rank()) + "/" + std::to_string(b.rank()) +
                                      " vs lattice rank " + std::to_string(rank()));
  // Fast path for 32-bit entries: with rank below 2^20 no partial sum can
  // leave the 128-bit range.
  if (rows_.size() < (1u << 20)) {
    auto small = [](const Int& x, long& out) {
      if (!x.fits_slong_p()) return false;
      out = x.get_si();
      return out >= INT32_MIN && out <= INT32_MAX;
    };
    __int128 acc = 0;
    bool ok = true;
    for (std::size_t i = 0; i < rows_.size() && ok; ++i) {
      long ai = 0;
      if (sgn(a.coeffs[i]) == 0) continue;
      if (!small(a.coeffs[i], ai)) {
        ok = false;
        break;
      }
      __int128 row = 0;
      for (const auto& [j, g] : rows_[i]) {
        long gj, bj;
        if (sgn(b.coeffs[j]) == 0) continue;
        if (!small(g, gj) || !small(b.coeffs[j], bj)) {
          ok = false;
          break;
        }
        row += static_cast<__int128>(gj) * bj;
      }
      acc += row * ai;
    }
    if (ok && acc >= LONG_MIN && acc <= LONG_MAX) return Int(static_cast<long>(acc));
  }
  Int acc = 0, row;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    row = 0;
    for (const auto& [j, g] : rows_[i]) row += g * b.coeffs[j];
    acc += a.coeffs[i] * row;
  }
  return acc;
}

Int Lattice::k_dot(const HClass& a) const {
  if (a.rank() != rank()) fail(ErrorCode::RankMismatch, "class rank does not match lattice");
  Int acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += k_pair_[i] * a.coeffs[i];
  return acc;
}

Lattice Lattice::blown_up() const {
  Lattice L = *this;
  L.blow_up();
  return L;
}

Lattice& Lattice::blow_up() {
  const std::size_t e = rank();
  rows_.push_back({{e, Int(-1)}});
  k_pair_.push_back(-1);
  if (k_class_) k_class_->coeffs.push_back(1);
  return *this;
}

Int pair(const Lattice& L, const HClass& a, const HClass& b) { return L.pair(a, b); }

Int adjunction_defect(const Lattice& L, const HClass& a) { return L.square(a) + L.k_dot(a) + 2; }

Int sw_index(const Lattice& L, const HClass& a) { return L.square(a) - L.k_dot(a); }

Inertia inertia(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
  auto swap_idx = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: add a row to create a pivot.
      std::size_t pi = n, qi = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            qi = j;
            break;
          }
      if (pi == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) a[pi][j] += a[qi][j];
      for (std::size_t i = 0; i < n; ++i) a[i][pi] += a[i][qi];
      p = pi;
    }
    swap_idx(k, p);
    const Rational piv = a[k][k];
    (piv > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / piv;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  return out;
}

// ---------------------------------------------------------------- blowdown

HClass Blowdown::project(const Lattice& old, const HClass& E, const HClass& x) const {
  HClass px = x + old.pair(x, E) * E;
  HClass y(coords.size());
  for (std::size_t s = 0; s < coords.size(); ++s) {
    Int acc = 0;
    for (std::size_t i = 0; i < px.rank(); ++i) acc += coords[s][i] * px[i];
    y[s] = acc;
  }
  return y;
}

Blowdown blow_down(const Lattice& L, const HClass& E) {
  if (L.square(E) != -1 || L.k_dot(E) != -1)
    fail(ErrorCode::NotBlowdownable, "class " + to_string(E) + " is not exceptional");
  const std::size_t n = L.rank();
  std::vector<Int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = L.pair(HClass::unit(n, i), E);

  // Column operations U with w.U = (+-1 at p, 0 elsewhere); Uinv tracked alongside.
  IntMatrix U(n, std::vector<Int>(n, 0)), Uinv = U;
  for (std::size_t i = 0; i < n; ++i) U[i][i] = Uinv[i][i] = 1;
  std::size_t p = n;
  while (true) {
    p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0 && (p == n || abs(w[i]) < abs(w[p]))) p = i;
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p || w[i] == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), w[i].get_mpz_t(), w[p].get_mpz_t());
      if (q == 0) {
        done = false;
        continue;
      }
      w[i] -= q * w[p];
      for (std::size_t r = 0; r < n; ++r) U[r][i] -= q * U[r][p];
      for (std::size_t c = 0; c < n; ++c) Uinv[p][c] += q * Uinv[i][c];
      if (w[i] != 0) done = false;
    }
    if (done) break;
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != p) keep.push_back(i);
  const std::size_t m = keep.size();
  std::vector<HClass> basis;
  for (std::size_t i : keep) {
    HClass b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = U[r][i];
    basis.push_back(std::move(b));
  }
  IntMatrix gram(m, std::vector<Int>(m));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s; t < m; ++t) gram[s][t] = gram[t][s] = L.pair(basis[s], basis[t]);
  std::vector<Int> kp(m);
  for (std::size_t s = 0; s < m; ++s) kp[s] = L.k_dot(basis[s]);

  Blowdown out;
  out.coords.resize(m);
  for (std::size_t s = 0; s < m; ++s) out.coords[s] = Uinv[keep[s]];
  std::optional<HClass> kc;
  if (L.canonical()) kc = out.project(L, E, L.K());

  out.lattice = Lattice::general(std::move(gram), std::move(kp), std::move(kc));
  // Contracting a trailing exceptional basis vector keeps the minimal-model basis.
  const std::size_t first_exc = L.tag() == BasisTag::ProjectivePlane ? 1 : 2;
  bool is_unit = E[p] == 1 || E[p] == -1;
  for (std::size_t i = 0; i < n && is_unit; ++i)
    if (i != p && E[i] != 0) is_unit = false;
  if (L.tag() != BasisTag::General && is_unit && p >= first_exc) {
    Lattice kept = L.tag() == BasisTag::ProjectivePlane ? Lattice::projective_plane(n - 2)
                                                        : Lattice::hirzebruch(L.hirzebruch_k(), n - 3);
    if (kept.gram() == out.lattice.gram() && kept.canonical() == out.lattice.canonical()) out.lattice = kept;
  }
  return out;
}

// ---------------------------------------------------------------- area and charts

Rational AreaForm::operator()(const HClass& a) const {
  if (a.rank() != values.size()) fail(ErrorCode::RankMismatch, "area form rank mismatch");
  // Accumulate over a running common denominator; canonicalize once.
  Int num = 0, den = 1, g;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const Int& q = values[i].get_den();
    if (q == den) {
      num += values[i].get_num() * a[i];
      continue;
    }
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
    Int m = q / g;
    num = num * m + values[i].get_num() * a[i] * (den / g);
    den *= m;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {
HClass apply(const IntMatrix& m, const HClass& x) {
  HClass y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < x.rank(); ++j)
      if (m[i][j] != 0) acc += m[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}
}  // namespace

HClass Chart::to_target(const HClass& x) const { return apply(fwd, x); }
HClass Chart::from_target(const HClass& y) const { return apply(inv, y); }

AreaForm Chart::area_to_target(const AreaForm& a) const {
  AreaForm out;
  const std::size_t r = target.rank();
  out.values.assign(r, 0);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t j = 0; j < a.values.size(); ++j)
      if (inv[j][t] != 0) out.values[t] += a.values[j] * Rational(inv[j][t]);
  return out;
}

std::optional<Chart> projective_chart(const Lattice& L) {
  const std::size_t r = L.rank();
  IntMatrix id(r, std::vector<Int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  if (L.tag() == BasisTag::ProjectivePlane) return Chart{L, id, id};
  if (L.tag() != BasisTag::Hirzebruch) return std::nullopt;

  const long k = L.hirzebruch_k();
  const long j = k / 2;
  const std::size_t m = r - 2;
  IntMatrix fwd(r, std::vector<Int>(r, 0));  // column c = image of old basis vector c
  if (k % 2 == 1) {
    fwd[0][0] = 1;
    fwd[1][0] = -1;  // f = H - E1
    fwd[0][1] = -j;
    fwd[1][1] = j + 1;  // s = -jH + (j+1)E1
    for (std::size_t i = 2; i < r; ++i) fwd[i][i] = 1;
  } else {
    if (m == 0) return std::nullopt;  // even lattice, no CP^2 chart
    fwd[0][0] = 1;
    fwd[1][0] = -1;  // f = H - E1
    fwd[0][1] = 1 - j;
    fwd[1][1] = j;
    fwd[2][1] = -1;  // s = (1-j)H + jE1 - E2
    fwd[0][2] = 1;
    fwd[1][2] = -1;
    fwd[2][2] = -1;  // e1 = H - E1 - E2
    for (std::size_t i = 3; i < r; ++i) fwd[i][i] = 1;
  }
  return Chart{Lattice::projective_plane(r - 1), fwd, unimodular_inverse(fwd)};
}

// ---------------------------------------------------------------- Kodaira

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity: return "-inf";
    case Kodaira::Zero: return "0";
    case Kodaira::One: return "1";
    case Kodaira::Two: return "2";
  }
  return "?";
}

Kodaira log_kodaira(const Rational& x, const Int& s) {
  if (x < 0 || s < 0) return Kodaira::MinusInfinity;
  if (x == 0 && s == 0) return Kodaira::Zero;
  if (x > 0 && s == 0) return Kodaira::One;
  if (x > 0 && s > 0) return Kodaira::Two;
  fail(ErrorCode::Unclassified, "adjoint area 0 with positive square " + s.get_str());
}

}  // namespace wpp::homlat
