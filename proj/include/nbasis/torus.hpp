#pragma once

#include <string>
#include <utility>

#include "nbasis/bivariate.hpp"
#include "nbasis/error.hpp"
#include "nbasis/field.hpp"
#include "nbasis/number_theory.hpp"

// Lucas torus x^2 - alpha*y^2 = 1 with (x,y)+(x',y') = (xx' + alpha yy', xy' + x'y).
namespace nbasis {

template <class E>
struct TorusPoint {
  E x, y;
  bool operator==(const TorusPoint&) const = default;
};

template <class F>
TorusPoint<typename F::Elem> torus_identity(const F& f) {
  return {f.one(), f.zero()};
}

template <class F>
bool on_curve(const F& f, const TorusPoint<typename F::Elem>& P, const typename F::Elem& alpha) {
  auto lhs = f.sub(f.mul(P.x, P.x), f.mul(alpha, f.mul(P.y, P.y)));
  return f.eq(lhs, f.one());
}

template <class F>
TorusPoint<typename F::Elem> torus_add(const F& f, const TorusPoint<typename F::Elem>& P,
                                       const TorusPoint<typename F::Elem>& Q, const typename F::Elem& alpha) {
  return {f.add(f.mul(P.x, Q.x), f.mul(alpha, f.mul(P.y, Q.y))), f.add(f.mul(P.x, Q.y), f.mul(Q.x, P.y))};
}

template <class F>
TorusPoint<typename F::Elem> torus_neg(const F& f, const TorusPoint<typename F::Elem>& P) {
  return {P.x, f.neg(P.y)};
}

template <class F>
TorusPoint<typename F::Elem> torus_sub(const F& f, const TorusPoint<typename F::Elem>& P,
                                       const TorusPoint<typename F::Elem>& Q, const typename F::Elem& alpha) {
  return torus_add(f, P, torus_neg(f, Q), alpha);
}

// Checked variant of torus_add: PointOffCurve when an input is not on the curve.
template <class F>
TorusPoint<typename F::Elem> torus_add_checked(const F& f, const TorusPoint<typename F::Elem>& P,
                                               const TorusPoint<typename F::Elem>& Q, const typename F::Elem& alpha) {
  if (!on_curve(f, P, alpha) || !on_curve(f, Q, alpha)) raise(ErrorCode::PointOffCurve, "point is not on the torus");
  return torus_add(f, P, Q, alpha);
}

// [k]P by double-and-add.
template <class F>
TorusPoint<typename F::Elem> torus_scalar_mul(const F& f, u128 k, TorusPoint<typename F::Elem> P,
                                              const typename F::Elem& alpha) {
  auto R = torus_identity(f);
  while (k) {
    if (k & 1) R = torus_add(f, R, P, alpha);
    k >>= 1;
    if (k) P = torus_add(f, P, P, alpha);
  }
  return R;
}

// Exact order of P in a group of the given order.
template <class F>
u64 torus_point_order(const F& f, const TorusPoint<typename F::Elem>& P, const typename F::Elem& alpha, u64 group_order) {
  const auto O = torus_identity(f);
  if (!(torus_scalar_mul(f, group_order, P, alpha) == O))
    raise(ErrorCode::InvalidParameter, "group order is not a multiple of the point order");
  u64 order = group_order;
  for (u64 l : prime_divisors(group_order))
    while (order % l == 0 && torus_scalar_mul(f, order / l, P, alpha) == O) order /= l;
  return order;
}

// N_x = sum C(n,2k) x^{n-2k} y^{2k} alpha^k, N_y = sum C(n,2k+1) x^{n-2k-1} y^{2k+1} alpha^k.
std::pair<BiPoly, BiPoly> isogeny_polynomials(const Field& k, u64 n, Field::Elem alpha);

// O(x, z) with N_y(x, y) = y * O(x, y^2), evaluated at (x, z) in F.
template <class F>
typename F::Elem isogeny_odd_part(const F& f, const Field& k, u64 n, Field::Elem alpha, const typename F::Elem& x,
                                  const typename F::Elem& z) {
  const auto binom = pascal_row_mod(n, k.characteristic());
  auto acc = f.zero();
  Field::Elem ak = k.one();
  auto zk = f.one();
  for (u64 j = 0; 2 * j + 1 <= n; ++j) {
    const Field::Elem c = k.mul(k.from_int(static_cast<i64>(binom[2 * j + 1])), ak);
    auto term = f.mul(zk, f.pow(x, n - 2 * j - 1));
    acc = f.add(acc, f.mul(f.from_base(c), term));
    ak = k.mul(ak, alpha);
    zk = f.mul(zk, z);
  }
  return acc;
}

std::string format_point(const Field& k, const TorusPoint<Field::Elem>& P);
TorusPoint<Field::Elem> parse_point(const Field& k, const std::string& text);  // ParseError

}  // namespace nbasis
