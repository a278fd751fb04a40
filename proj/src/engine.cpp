#include "nbasis/engine.hpp"

#include "nbasis/error.hpp"

namespace nbasis {

namespace {

void check_element(const NormalBasisContext& ctx, const CVec& x) {
  if (x.size() != ctx.n)
    raise(ErrorCode::SpecMismatch, "element has " + std::to_string(x.size()) + " coordinates, context has n=" +
                                       std::to_string(ctx.n));
  for (auto c : x)
    if (!ctx.k().is_valid(c)) raise(ErrorCode::SpecMismatch, "coordinate is not an element of K");
}

CVec multiply_with(const NormalBasisContext& ctx, const Convolver& conv, const CVec& x, const CVec& y,
                   MultiplyStats* stats) {
  check_element(ctx, x);
  check_element(ctx, y);
  const Field& k = ctx.k();
  MultiplyStats local;
  auto conv_count = [&](const CVec& a, const CVec& b) {
    ++local.convolutions;
    return conv.convolve(a, b);
  };
  auto pw_count = [&](const CVec& a, const CVec& b) {
    ++local.pointwise;
    return pointwise(k, a, b);
  };

  CVec d = ctx.differenced ? pw_count(vec_sub(k, x, shift(x, 1)), vec_sub(k, y, shift(y, 1))) : pw_count(x, y);
  CVec interp = vec_scale(k, ctx.scale, conv_count(ctx.i_vec, d));
  CVec evals = pw_count(conv_count(ctx.u_vec, x), conv_count(ctx.u_vec, y));
  CVec inner = vec_sub(k, evals, vec_scale(k, ctx.scale, conv_count(ctx.w_vec, d)));
  CVec out = vec_add(k, interp, conv_count(ctx.u_inv_vec, inner));
  if (stats) {
    stats->convolutions += local.convolutions;
    stats->pointwise += local.pointwise;
  }
  return out;
}

}  // namespace

Engine::Engine(const NormalBasisContext& ctx, ConvPath path) : ctx_(ctx), conv_(ctx.base, ctx.n, path) {}

CVec Engine::multiply(const CVec& x, const CVec& y, MultiplyStats* stats) const {
  return multiply_with(ctx_, conv_, x, y, stats);
}

CVec nb_multiply(const NormalBasisContext& ctx, const CVec& x, const CVec& y, MultiplyStats* stats) {
  if (ctx.convolver) return multiply_with(ctx, *ctx.convolver, x, y, stats);
  return multiply_with(ctx, Convolver(ctx.base, ctx.n), x, y, stats);
}

CVec nb_add(const NormalBasisContext& ctx, const CVec& x, const CVec& y) {
  check_element(ctx, x);
  check_element(ctx, y);
  return vec_add(ctx.k(), x, y);
}

CVec nb_frobenius(const NormalBasisContext& ctx, const CVec& x, long k) {
  check_element(ctx, x);
  return shift(x, k);
}

}  // namespace nbasis
