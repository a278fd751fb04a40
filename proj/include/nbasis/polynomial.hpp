#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "nbasis/error.hpp"
#include "nbasis/number_theory.hpp"

// Dense univariate polynomials over any field-like type F exposing
// Elem, zero(), one(), add, sub, neg, mul, inv, is_zero, eq.
// Coefficients are little-endian; the zero polynomial is the empty vector.
namespace nbasis::poly {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class P>
int degree(const P& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class F>
Poly<F> constant(const F& f, const typename F::Elem& c) {
  Poly<F> r;
  if (!f.is_zero(c)) r.push_back(c);
  return r;
}

template <class F>
Poly<F> monomial(const F& f, const typename F::Elem& c, std::size_t k) {
  if (f.is_zero(c)) return {};
  Poly<F> r(k + 1, f.zero());
  r[k] = c;
  return r;
}

// X^k
template <class F>
Poly<F> x_pow(const F& f, std::size_t k) {
  return monomial(f, f.one(), k);
}

template <class F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  Poly<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
  return r;
}

template <class F>
Poly<F> scale(const F& f, const typename F::Elem& c, const Poly<F>& a) {
  if (f.is_zero(c)) return {};
  Poly<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  trim(f, r);
  return r;
}

namespace detail {

// out[0 .. na+nb-1) += a * b, schoolbook.
template <class F, class E>
void mul_acc_school(const F& f, const E* a, std::size_t na, const E* b, std::size_t nb, E* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
}

constexpr std::size_t kKaratsubaCutoff = 24;

// Balanced Karatsuba on equal-length operands; out has 2n-1 slots, zeroed.
template <class F, class E>
void karatsuba(const F& f, const E* a, const E* b, std::size_t n, E* out) {
  if (n <= kKaratsubaCutoff) {
    mul_acc_school(f, a, n, b, n, out);
    return;
  }
  const std::size_t lo = n / 2, hi = n - lo;
  std::vector<E> z0(2 * lo - 1, f.zero()), z2(2 * hi - 1, f.zero()), z1(2 * hi - 1, f.zero());
  karatsuba(f, a, b, lo, z0.data());
  karatsuba(f, a + lo, b + lo, hi, z2.data());
  std::vector<E> sa(hi, f.zero()), sb(hi, f.zero());
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[lo + i];
    sb[i] = b[lo + i];
  }
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] = f.add(sa[i], a[i]);
    sb[i] = f.add(sb[i], b[i]);
  }
  karatsuba(f, sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = f.add(out[lo + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = f.add(out[2 * lo + i], z2[i]);
}

}  // namespace detail

template <class F>
Poly<F> mul_school(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  detail::mul_acc_school(f, a.data(), a.size(), b.data(), b.size(), r.data());
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul_karatsuba(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = std::max(a.size(), b.size());
  Poly<F> pa(a), pb(b);
  pa.resize(n, f.zero());
  pb.resize(n, f.zero());
  Poly<F> r(2 * n - 1, f.zero());
  detail::karatsuba(f, pa.data(), pb.data(), n, r.data());
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (std::min(a.size(), b.size()) > detail::kKaratsubaCutoff) return mul_karatsuba(f, a, b);
  return mul_school(f, a, b);
}

template <class F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, f.inv(a.back()), a);
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> r(a), q(a.size() - b.size() + 1, f.zero());
  const auto lc_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    const auto c = f.mul(r[i], lc_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b[j]));
  }
  r.resize(db);
  trim(f, r);
  trim(f, q);
  return {q, r};
}

template <class F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& m) {
  return divmod(f, a, m).second;
}

template <class F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = constant(f, f.one()), s1;
  Poly<F> t0, t1 = constant(f, f.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    auto s2 = sub(f, s0, mul(f, q, s1));
    auto t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const auto c = f.inv(r0.back());
  return {scale(f, c, r0), scale(f, c, s0), scale(f, c, t0)};
}

// Inverse of a modulo m; throws NotInvertible when gcd != 1.
template <class F>
Poly<F> invmod(const F& f, const Poly<F>& a, const Poly<F>& m) {
  auto [g, s, t] = xgcd(f, mod(f, a, m), m);
  if (g.size() != 1) raise(ErrorCode::NotInvertible, "polynomial not invertible modulo the given modulus");
  return mod(f, s, m);
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, u128 e, const Poly<F>& m) {
  Poly<F> r = mod(f, constant(f, f.one()), m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return r;
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(f.from_int(static_cast<i64>(i)), a[i]);
  trim(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto r = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

// Lexicographic order on little-endian coefficient sequences (shorter first).
template <class F>
bool lex_less(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.eq(a[i], b[i])) continue;
    return f.less(a[i], b[i]);
  }
  return false;
}

}  // namespace nbasis::poly
