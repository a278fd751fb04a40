#include "nbasis/kummer.hpp"

#include "nbasis/error.hpp"
#include "nbasis/oracle.hpp"
#include "nbasis/sqrt.hpp"

namespace nbasis {

NormalBasisContext build_kummer_context(const KummerParams& params) {
  if (!params.base) raise(ErrorCode::InvalidParameter, "kummer construction needs a base field");
  const Field& k = *params.base;
  const u64 q = k.order(), n = params.n, m = params.m;
  if (n < 2 || m < 2) raise(ErrorCode::InvalidParameter, "need n >= 2 and m >= 2");
  if ((q - 1) % (m * n) != 0)
    raise(ErrorCode::InvalidParameter, "mn = " + std::to_string(m * n) + " does not divide q - 1 = " + std::to_string(q - 1));

  const Field::Elem a = params.a ? *params.a : k.primitive_element();
  if (!k.is_valid(a)) raise(ErrorCode::SpecMismatch, "a is not an element of K");
  if (k.is_zero(a)) raise(ErrorCode::ZeroElement, "a must be nonzero");
  for (u64 l : prime_divisors(n))
    if (k.eq(k.pow(a, (q - 1) / l), k.one()))
      raise(ErrorCode::OrderTooSmall, "class of a in K*/K*^n has order < n (a is an " + std::to_string(l) + "-th power)");

  const Field::Elem zeta = params.zeta_mn ? *params.zeta_mn : k.pow(k.primitive_element(), (q - 1) / (m * n));
  if (!k.is_valid(zeta) || k.is_zero(zeta) || multiplicative_order(k, zeta, q - 1) != m * n)
    raise(ErrorCode::BadRootOfUnity, "zeta is not a primitive " + std::to_string(m * n) + "-th root of unity");
  const Field::Elem zeta_n = k.pow(zeta, m);

  NormalBasisContext ctx;
  ctx.kind = GroupKind::Multiplicative;
  ctx.base = params.base;
  ctx.n = n;
  ctx.params.a = a;
  ctx.params.m = m;
  ctx.params.zeta_mn = zeta;

  ctx.l_poly.assign(n + 1, k.zero());
  ctx.l_poly[0] = k.neg(a);
  ctx.l_poly[n] = k.one();
  ExtField L(params.base, ctx.l_poly);
  const auto theta = L.theta();
  const Field::Elem zeta_n_inv = k.inv(zeta_n);
  Field::Elem zk = k.one();  // zeta_n^{-j}
  for (u64 j = 0; j < n; ++j) {
    ctx.theta.push_back(L.inv(L.sub(L.scale(zk, theta), L.one())));
    zk = k.mul(zk, zeta_n_inv);
  }

  ctx.u_vec.resize(n);
  Field::Elem x = zeta;  // zeta_mn * zeta_n^j
  for (u64 j = 0; j < n; ++j) {
    ctx.u_vec[j] = k.inv(k.sub(x, k.one()));
    x = k.mul(x, zeta_n);
  }
  ctx.w_vec = pointwise(k, ctx.u_vec, ctx.u_vec);
  ctx.u_inv_vec = convolve_inverse(k, ctx.u_vec);
  ctx.scale = k.one();
  ctx.differenced = false;

  finalize_context(ctx);
  ctx.i_vec = from_polynomial(ctx, L.mul(ctx.theta[0], ctx.theta[0]));
  return ctx;
}

}  // namespace nbasis
