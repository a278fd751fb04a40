#pragma once

#include "nbasis/error.hpp"
#include "nbasis/number_theory.hpp"

namespace nbasis {

// Square root in a finite field F of cardinality `card` (Tonelli-Shanks).
// Of the two roots the lexicographically smaller coefficient sequence is returned.
template <class F>
typename F::Elem sqrt_in_field(const F& f, const typename F::Elem& a, u128 card) {
  using E = typename F::Elem;
  if (f.is_zero(a)) return a;
  if (card % 2 == 0) return f.pow(a, card / 2);  // squaring is bijective in characteristic 2
  const u128 n = card - 1;
  const E one = f.one();
  const E minus_one = f.neg(one);
  if (!f.eq(f.pow(a, n / 2), one)) raise(ErrorCode::NonSquare, "element is not a square");
  int s = 0;
  u128 odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  E z = f.zero();
  bool found = false;
  for (u64 i = 2; i < 1000000 && !found; ++i) {
    z = f.nth(i);
    if (f.is_zero(z)) continue;
    found = f.eq(f.pow(z, n / 2), minus_one);
  }
  if (!found) raise(ErrorCode::ExhaustedSearch, "no quadratic non-residue found");
  int m = s;
  E c = f.pow(z, odd);
  E t = f.pow(a, odd);
  E r = f.pow(a, (odd + 1) / 2);
  while (!f.eq(t, one)) {
    int i = 0;
    E t2 = t;
    while (!f.eq(t2, one)) {
      t2 = f.mul(t2, t2);
      ++i;
    }
    E b = c;
    for (int j = 0; j < m - i - 1; ++j) b = f.mul(b, b);
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  E other = f.neg(r);
  return f.less(other, r) ? other : r;
}

template <class F>
bool is_square(const F& f, const typename F::Elem& a, u128 card) {
  if (f.is_zero(a) || card % 2 == 0) return true;
  return f.eq(f.pow(a, (card - 1) / 2), f.one());
}

// Exact multiplicative order of a, given the group order (factored by trial division).
template <class F>
u64 multiplicative_order(const F& f, const typename F::Elem& a, u64 group_order) {
  if (f.is_zero(a)) raise(ErrorCode::ZeroElement, "order of zero is undefined");
  if (!f.eq(f.pow(a, group_order), f.one()))
    raise(ErrorCode::InvalidParameter, "group order is not a multiple of the element order");
  u64 order = group_order;
  for (u64 l : prime_divisors(group_order)) {
    while (order % l == 0 && f.eq(f.pow(a, order / l), f.one())) order /= l;
  }
  return order;
}

}  // namespace nbasis
