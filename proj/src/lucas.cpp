#include "nbasis/lucas.hpp"

#include <random>

#include "nbasis/bivariate.hpp"
#include "nbasis/error.hpp"
#include "nbasis/oracle.hpp"
#include "nbasis/sqrt.hpp"

namespace nbasis {

namespace {

// u_{O,t}(Q) = 1 + 1/(y - lambda (x - 1)) over K or L.
template <class F>
typename F::Elem u_ot(const F& f, Field::Elem lambda, const TorusPoint<typename F::Elem>& Q) {
  auto den = f.sub(Q.y, f.mul(f.from_base(lambda), f.sub(Q.x, f.one())));
  return f.add(f.one(), f.inv(den));
}

// 1/v^2 with v = (x - 1)/y.
template <class F>
typename F::Elem inv_v_squared(const F& f, const TorusPoint<typename F::Elem>& Q) {
  auto r = f.div(Q.y, f.sub(Q.x, f.one()));
  return f.mul(r, r);
}

template <class F>
TorusPoint<typename F::Elem> lift(const F& f, const KPoint& P) {
  return {f.from_base(P.x), f.from_base(P.y)};
}

Field::Elem lambda_of(const Field& k, const KPoint& t) { return k.div(t.y, k.sub(t.x, k.one())); }

}  // namespace

Field::Elem default_alpha(const Field& k) {
  for (Field::Elem a = 1; a < k.order(); ++a)
    if (!is_square(k, a, k.order())) return a;
  raise(ErrorCode::ExhaustedSearch, "no nonsquare in K");
}

void validate_lucas(const Field& k, Field::Elem alpha, u64 n) {
  const u64 q = k.order();
  if (q % 2 == 0) raise(ErrorCode::InvalidParameter, "the Lucas torus needs odd characteristic");
  if (!k.is_valid(alpha)) raise(ErrorCode::SpecMismatch, "alpha is not an element of K");
  if (k.is_zero(alpha) || is_square(k, alpha, q))
    raise(ErrorCode::InvalidParameter, "alpha = " + k.format(alpha) + " must be a nonsquare");
  if (n <= 1 || n >= q + 1 || (q + 1) % n != 0)
    raise(ErrorCode::InvalidParameter, "n = " + std::to_string(n) + " must be a nontrivial divisor of q + 1");
}

bool is_torus_generator(const Field& k, Field::Elem alpha, const KPoint& P) {
  if (!on_curve(k, P, alpha)) return false;
  return torus_point_order(k, P, alpha, k.order() + 1) == k.order() + 1;
}

KPoint find_generator(const Field& k, Field::Elem alpha, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(0, k.order() - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Field::Elem x = dist(rng);
    const Field::Elem z = k.div(k.sub(k.mul(x, x), k.one()), alpha);
    if (!is_square(k, z, k.order())) continue;
    const KPoint P{x, sqrt_in_field(k, z, k.order())};
    if (is_torus_generator(k, alpha, P)) return P;
  }
  raise(ErrorCode::ExhaustedSearch, "no generator of the torus found");
}

Fiber fiber_field(const FieldPtr& base, Field::Elem alpha, u64 n, const KPoint& a, u64 seed) {
  const Field& k = *base;
  auto [nx, ny] = isogeny_polynomials(k, n, alpha);
  nx.add_term(k, 0, 0, k.neg(a.x));
  BiPoly curve;
  curve.set(2, 0, k.one());
  curve.set(0, 2, k.neg(alpha));
  curve.set(0, 0, k.neg(k.one()));
  const KPoly res = resultant_eliminate(k, nx, curve, Var::Y);
  if (res.empty()) raise(ErrorCode::NoDegreeNFactor, "resultant vanishes identically");
  const Field::Elem alpha_inv = k.inv(alpha);
  bool any = false;
  for (const auto& fac : poly_factor(k, res, seed)) {
    if (poly::degree(fac.poly) != static_cast<int>(n)) continue;
    any = true;
    auto L = std::make_shared<const ExtField>(base, fac.poly);
    const auto theta = L->theta();
    // y_b^2 = (theta^2 - 1)/alpha; N_y = y O(x, y^2) gives y_b = y(a) / O(theta, y_b^2).
    const auto z = L->scale(alpha_inv, L->sub(L->mul(theta, theta), L->one()));
    const auto odd = isogeny_odd_part(*L, k, n, alpha, theta, z);
    if (L->is_zero(odd)) continue;
    const auto y_b = L->scale(a.y, L->inv(odd));
    if (!L->eq(L->mul(y_b, y_b), z)) continue;
    const LPoint b{theta, y_b};
    if (!(torus_scalar_mul(*L, n, b, L->from_base(alpha)) == lift(*L, a))) continue;
    return {fac.poly, L, y_b};
  }
  if (!any) raise(ErrorCode::NoDegreeNFactor, "resultant has no irreducible factor of degree " + std::to_string(n));
  raise(ErrorCode::SignCheckFailed, "no degree-n factor yields a torus point over a");
}

Field::Elem lucas_c_constant(const Field& k, Field::Elem alpha, u64 n, const KPoint& t, const KPoint& Q) {
  const Field::Elem lambda = lambda_of(k, t);
  Field::Elem s = k.zero();
  KPoint R = Q;
  const KPoint tneg = torus_neg(k, t);
  for (u64 j = 0; j < n; ++j) {
    s = k.add(s, u_ot(k, lambda, R));
    R = torus_add(k, R, tneg, alpha);
  }
  return s;
}

LucasConstants canonical_constants(const Field& k, u64 n, Field::Elem c_frak) {
  const Field::Elem nn = k.from_int(static_cast<i64>(n % k.characteristic()));
  if (!k.is_zero(nn)) return {c_frak, k.one(), k.div(k.sub(k.one(), c_frak), nn)};
  if (k.is_zero(c_frak)) raise(ErrorCode::ConstantCheckFailed, "c vanishes while p divides n");
  return {c_frak, k.inv(c_frak), k.zero()};
}

NormalBasisContext build_lucas_context(const LucasParams& params) {
  if (!params.base) raise(ErrorCode::InvalidParameter, "lucas construction needs a base field");
  const Field& k = *params.base;
  const u64 q = k.order(), n = params.n;
  const Field::Elem alpha = params.alpha ? *params.alpha : default_alpha(k);
  validate_lucas(k, alpha, n);
  KPoint a;
  if (params.generator) {
    a = *params.generator;
    if (!k.is_valid(a.x) || !k.is_valid(a.y)) raise(ErrorCode::SpecMismatch, "generator is not over K");
    if (!on_curve(k, a, alpha)) raise(ErrorCode::PointOffCurve, format_point(k, a) + " is not on the torus");
    const u64 ord = torus_point_order(k, a, alpha, q + 1);
    if (ord != q + 1)
      raise(ErrorCode::OrderTooSmall, format_point(k, a) + " has order " + std::to_string(ord) + ", need " +
                                          std::to_string(q + 1));
  } else {
    a = find_generator(k, alpha, params.seed);
  }

  Fiber fiber = fiber_field(params.base, alpha, n, a, params.seed);
  const ExtField& L = *fiber.L;
  const auto alpha_l = L.from_base(alpha);
  const LPoint b{L.theta(), fiber.y_b};

  // t = Phi(b) - b must be a K-rational point of exact order n.
  const LPoint phi_b{L.frobenius(b.x), L.frobenius(b.y)};
  const LPoint tl = torus_sub(L, phi_b, b, alpha_l);
  if (!L.in_base(tl.x) || !L.in_base(tl.y)) raise(ErrorCode::NTorsionMismatch, "Phi(b) - b is not K-rational");
  const KPoint t{tl.x[0], tl.y[0]};
  if (t == torus_identity(k) || torus_point_order(k, t, alpha, q + 1) != n)
    raise(ErrorCode::NTorsionMismatch, "t = " + format_point(k, t) + " does not have order n");

  // c = sum_k u_{kt,(k+1)t} at two points outside <t>; the sum must not depend on the point.
  std::vector<KPoint> samples;
  KPoint Q = a;
  for (u64 j = 1; j <= q + 1 && samples.size() < 2; ++j, Q = torus_add(k, Q, a, alpha)) {
    if (torus_scalar_mul(k, n, Q, alpha) == torus_identity(k)) continue;
    samples.push_back(Q);
  }
  if (samples.size() < 2) raise(ErrorCode::ConstantCheckFailed, "not enough sample points outside <t>");
  const Field::Elem c0 = lucas_c_constant(k, alpha, n, t, samples[0]);
  const Field::Elem c1 = lucas_c_constant(k, alpha, n, t, samples[1]);
  if (!k.eq(c0, c1)) raise(ErrorCode::ConstantCheckFailed, "sum of u_{kt,(k+1)t} is not constant");
  const LucasConstants consts = canonical_constants(k, n, c0);

  NormalBasisContext ctx;
  ctx.kind = GroupKind::Lucas;
  ctx.base = params.base;
  ctx.n = n;
  ctx.params.alpha = alpha;
  ctx.params.generator = a;
  ctx.params.seed = params.seed;
  ctx.l_poly = fiber.p_min;

  const Field::Elem lambda = lambda_of(k, t);
  const LPoint tneg = lift(L, torus_neg(k, t));
  LPoint R = b;
  for (u64 j = 0; j < n; ++j) {
    ctx.theta.push_back(L.add(L.scale(consts.a_frak, u_ot(L, lambda, R)), L.from_base(consts.b_frak)));
    R = torus_add(L, R, tneg, alpha_l);
  }

  ctx.u_vec.resize(n);
  ctx.w_vec.resize(n);
  KPoint P = a;
  for (u64 j = 0; j < n; ++j) {
    ctx.u_vec[j] = k.add(k.mul(consts.a_frak, u_ot(k, lambda, P)), consts.b_frak);
    ctx.w_vec[j] = inv_v_squared(k, P);
    P = torus_add(k, P, t, alpha);
  }
  ctx.u_inv_vec = convolve_inverse(k, ctx.u_vec);
  const Field::Elem half_alpha = k.div(k.mul(consts.a_frak, alpha), k.from_int(2));
  ctx.scale = k.mul(half_alpha, half_alpha);
  ctx.differenced = true;
  ctx.lucas = LucasData{t, fiber.y_b, consts.c_frak, consts.a_frak, consts.b_frak};

  finalize_context(ctx);
  ctx.i_vec = from_polynomial(ctx, inv_v_squared(L, b));
  return ctx;
}

}  // namespace nbasis
