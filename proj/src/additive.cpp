#include "nbasis/additive.hpp"

#include "nbasis/error.hpp"
#include "nbasis/oracle.hpp"

namespace nbasis {

Field::Elem default_additive_a(const Field& k) {
  for (Field::Elem a = 1; a < k.order(); ++a)
    if (k.trace(a) != 0) return a;
  raise(ErrorCode::TraceZero, "no element of nonzero trace");
}

NormalBasisContext build_additive_context(const AdditiveParams& params) {
  if (!params.base) raise(ErrorCode::InvalidParameter, "additive construction needs a base field");
  const Field& k = *params.base;
  if (k.degree() < 2)
    raise(ErrorCode::EvaluationPointInPrimeField, "K = F_p leaves no evaluation point outside F_p");
  const u64 p = k.characteristic();
  const Field::Elem a = params.a ? *params.a : default_additive_a(k);
  const Field::Elem r = params.r ? *params.r : k.epsilon();
  if (!k.is_valid(a) || !k.is_valid(r)) raise(ErrorCode::SpecMismatch, "parameter is not an element of K");
  // Tr(a) != 0 iff a is not of the form x^p - x.
  if (k.trace(a) == 0) raise(ErrorCode::TraceZero, "a = " + k.format(a) + " has zero trace");
  if (k.in_prime_field(r)) raise(ErrorCode::EvaluationPointInPrimeField, "x(R) = " + k.format(r) + " lies in F_p");

  NormalBasisContext ctx;
  ctx.kind = GroupKind::Additive;
  ctx.base = params.base;
  ctx.n = p;
  ctx.params.a = a;
  ctx.params.r = r;

  // Y^p - Y - a
  ctx.l_poly.assign(p + 1, k.zero());
  ctx.l_poly[0] = k.neg(a);
  ctx.l_poly[1] = k.add(ctx.l_poly[1], k.neg(k.one()));
  ctx.l_poly[p] = k.add(ctx.l_poly[p], k.one());
  ExtField L(params.base, ctx.l_poly);
  const auto theta = L.theta();
  for (u64 j = 0; j < p; ++j) ctx.theta.push_back(L.inv(L.sub(theta, L.from_int(static_cast<i64>(j)))));

  ctx.u_vec.resize(p);
  for (u64 j = 0; j < p; ++j) ctx.u_vec[j] = k.inv(k.add(r, k.from_int(static_cast<i64>(j))));
  ctx.w_vec = pointwise(k, ctx.u_vec, ctx.u_vec);
  ctx.u_inv_vec = convolve_inverse(k, ctx.u_vec);
  ctx.scale = k.one();
  ctx.differenced = false;

  finalize_context(ctx);
  ctx.i_vec = from_polynomial(ctx, L.mul(ctx.theta[0], ctx.theta[0]));
  return ctx;
}

}  // namespace nbasis
