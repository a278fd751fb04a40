#include "nbasis/context.hpp"

#include "nbasis/additive.hpp"
#include "nbasis/error.hpp"
#include "nbasis/kummer.hpp"
#include "nbasis/lucas.hpp"
#include "nbasis/oracle.hpp"

namespace nbasis {

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Additive: return "additive";
    case GroupKind::Multiplicative: return "kummer";
    case GroupKind::Lucas: return "lucas";
  }
  return "?";
}

GroupKind parse_kind(const std::string& s) {
  if (s == "additive") return GroupKind::Additive;
  if (s == "kummer" || s == "multiplicative") return GroupKind::Multiplicative;
  if (s == "lucas") return GroupKind::Lucas;
  raise(ErrorCode::ParseError, "unknown context kind '" + s + "'");
}

void finalize_context(NormalBasisContext& ctx) {
  const Field& k = *ctx.base;
  const std::size_t n = ctx.n;
  ctx.ext = std::make_shared<const ExtField>(ctx.base, ctx.l_poly);
  if (static_cast<std::size_t>(ctx.ext->degree()) != n || ctx.theta.size() != n)
    raise(ErrorCode::SpecMismatch, "oracle data does not match n");
  ctx.theta_matrix = Matrix<Field>(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ctx.theta[i].size() != n) raise(ErrorCode::SpecMismatch, "theta row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) ctx.theta_matrix.at(i, j) = ctx.theta[i][j];
  }
  ctx.theta_inverse = matrix_inverse(k, ctx.theta_matrix);
  ctx.one_coords = from_polynomial(ctx, ctx.ext->one());
  ctx.frobenius_shift = -1;
  const auto f0 = ctx.ext->frobenius(ctx.theta[0]);
  for (std::size_t s = 0; s < n; ++s) {
    if (ctx.ext->eq(f0, ctx.theta[s])) {
      ctx.frobenius_shift = static_cast<long>(s);
      break;
    }
  }
  ctx.convolver = std::make_shared<const Convolver>(ctx.base, n, ConvPath::Auto);
}

NormalBasisContext rederive_context(const NormalBasisContext& ctx) {
  switch (ctx.kind) {
    case GroupKind::Additive:
      return build_additive_context({ctx.base, ctx.params.a, ctx.params.r});
    case GroupKind::Multiplicative:
      if (!ctx.params.m) raise(ErrorCode::ParseError, "kummer context lacks m");
      return build_kummer_context({ctx.base, ctx.n, *ctx.params.m, ctx.params.a, ctx.params.zeta_mn});
    case GroupKind::Lucas:
      return build_lucas_context({ctx.base, ctx.n, ctx.params.alpha, ctx.params.generator, ctx.params.seed});
  }
  raise(ErrorCode::ParseError, "unknown kind");
}

bool same_derived_data(const NormalBasisContext& a, const NormalBasisContext& b) {
  return a.kind == b.kind && a.base->spec() == b.base->spec() && a.n == b.n && a.i_vec == b.i_vec &&
         a.u_vec == b.u_vec && a.u_inv_vec == b.u_inv_vec && a.w_vec == b.w_vec && a.scale == b.scale &&
         a.differenced == b.differenced && a.l_poly == b.l_poly && a.theta == b.theta && a.one_coords == b.one_coords;
}

}  // namespace nbasis
