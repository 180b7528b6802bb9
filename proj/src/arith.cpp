#include "wpp/arith.hpp"

#include "wpp/error.hpp"

#include <algorithm>
#include <numeric>

namespace wpp::arith {

Int mod_inverse(const Int& x, const Int& m) {
  if (m <= 0) fail(ErrorCode::Precondition, "modulus must be positive");
  if (m == 1) return 0;
  Int r = mod_pos(x, m);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::NotCoprime, x.get_str() + " is not invertible modulo " + m.get_str());
  return mod_pos(inv, m);
}

WeightTriple make_weight_triple(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) fail(ErrorCode::Precondition, "weights must be positive");
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
    fail(ErrorCode::NotPairwiseCoprime,
         "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ") is not pairwise coprime");
  if (a == 1 || b == 1 || c == 1)
    fail(ErrorCode::DegenerateWeight, "weight 1 gives fewer than three singular points");

  // x*u = v (mod m)  =>  x = v*u^{-1}.
  auto solve = [](const Int& u, const Int& v, const Int& m) { return mod_pos(v * mod_inverse(u, m), m); };
  WeightTriple w;
  w.a = a;
  w.b = b;
  w.c = c;
  w.a_b = solve(b, c, a);
  w.a_c = solve(c, b, a);
  w.b_a = solve(a, c, b);
  w.b_c = solve(c, a, b);
  w.c_a = solve(a, b, c);
  w.c_b = solve(b, a, c);
  return w;
}

CanonicalTriple canonicalize(const WeightTriple& w) {
  std::array<Int, 3> vals{w.a, w.b, w.c};
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int x, int y) { return vals[x] < vals[y]; });
  return {make_weight_triple(vals[order[0]], vals[order[1]], vals[order[2]]), order};
}

NegCF neg_cf_expand(const Int& p, const Int& q) {
  if (!(p > q && q >= 1) || gcd(p, q) != 1)
    fail(ErrorCode::InvalidFraction, p.get_str() + "/" + q.get_str() + " needs p > q >= 1 coprime");
  NegCF out{{}, p, q};
  Int num = p, den = q;
  // num/den = b - r/den with b = ceil(num/den); continue with den/r.
  while (den != 0) {
    Int b = -floor_div(-num, den);
    out.entries.push_back(to_i64(b));
    Int rem = b * den - num;
    num = den;
    den = rem;
  }
  return out;
}

Rational neg_cf_value(std::span<const std::int64_t> entries) {
  if (entries.empty()) fail(ErrorCode::InvalidFraction, "empty continued fraction");
  // Evaluate from the tail: x_k = b_k, x_i = b_i - 1/x_{i+1}.
  Rational x(Int(static_cast<long>(entries.back())));
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (x == 0) fail(ErrorCode::InvalidFraction, "continued fraction has a zero tail");
    x = Rational(Int(static_cast<long>(entries[i]))) - 1 / x;
  }
  x.canonicalize();
  return x;
}

Int neg_cf_dual(const Int& p, const Int& q) {
  if (!(p > q && q >= 1) || gcd(p, q) != 1)
    fail(ErrorCode::InvalidFraction, p.get_str() + "/" + q.get_str() + " needs p > q >= 1 coprime");
  if (p == 2) return 1;
  return mod_inverse(q, p);
}

WeightSeq weight_sequence(const Int& p, const Int& q) {
  if (p < 0 || q < 0 || gcd(p, q) != 1)
    fail(ErrorCode::NotCoprime, "(" + p.get_str() + "," + q.get_str() + ") is not a coprime pair");
  WeightSeq out{p, q, {}, {}};
  if (p == 0 || q == 0) return out;  // (0,1) or (1,0): a fiber needs no blowups
  Int pi = p, qi = q;
  while (true) {
    out.steps.emplace_back(pi, qi);
    Int m = pi < qi ? pi : qi;
    out.m.push_back(m);
    if (pi == qi) break;
    Int diff = abs(pi - qi);
    pi = diff;
    qi = m;
  }
  return out;
}

}  // namespace wpp::arith
