#include "nbasis/oracle.hpp"

#include <sstream>

#include "nbasis/engine.hpp"

namespace nbasis {

ExtField::Elem to_polynomial(const NormalBasisContext& ctx, const CVec& x) {
  return row_times(ctx.k(), x, ctx.theta_matrix);
}

CVec from_polynomial(const NormalBasisContext& ctx, const ExtField::Elem& z) {
  return row_times(ctx.k(), z, ctx.theta_inverse);
}

CVec oracle_multiply(const NormalBasisContext& ctx, const CVec& x, const CVec& y) {
  return from_polynomial(ctx, ctx.L().mul(to_polynomial(ctx, x), to_polynomial(ctx, y)));
}

CVec oracle_frobenius(const NormalBasisContext& ctx, const CVec& x, u64 e) {
  auto z = to_polynomial(ctx, x);
  for (u64 i = 0; i < e; ++i) z = ctx.L().frobenius(z);
  return from_polynomial(ctx, z);
}

StructureConstants structure_constants(const NormalBasisContext& ctx) {
  StructureConstants sc;
  for (std::size_t i = 0; i < ctx.n; ++i) sc.rows.push_back(from_polynomial(ctx, ctx.L().mul(ctx.theta[0], ctx.theta[i])));
  return sc;
}

int compute_weight(const NormalBasisContext& ctx) {
  int w = 0;
  for (const auto& row : structure_constants(ctx).rows)
    for (auto c : row)
      if (c) ++w;
  return w;
}

CVec random_element(const NormalBasisContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ctx.k().order() - 1);
  CVec x(ctx.n);
  for (auto& c : x) c = dist(rng);
  return x;
}

VerifyReport verify_normal(const NormalBasisContext& ctx, int trials, u64 seed) {
  VerifyReport r;
  const Field& k = ctx.k();
  const std::size_t n = ctx.n;
  r.invertible = matrix_rank(k, ctx.theta_matrix) == n;
  r.conjugates = ctx.frobenius_shift >= 0 && gcd_u64(static_cast<u64>(ctx.frobenius_shift), n) == 1;
  if (r.conjugates) {
    for (std::size_t j = 0; j < n && r.conjugates; ++j)
      r.conjugates = ctx.L().eq(ctx.L().frobenius(ctx.theta[j]), ctx.theta[(j + ctx.frobenius_shift) % n]);
  }
  if (!r.conjugates) r.notes.push_back("theta_k are not the Galois conjugates of theta_0");
  r.weight = compute_weight(ctx);
  r.upper_bound = r.weight <= static_cast<int>(3 * n - 2);
  r.lower_bound = r.weight >= static_cast<int>(2 * n - 1);
  r.notes.push_back("weight counts the theta_0*theta_0 row as well as theta_0*theta_i for i >= 1");

  bool inv = convolve_naive(k, ctx.u_vec, ctx.u_inv_vec) == unit_vector(n);
  if (!inv) r.notes.push_back("u * u^-1 is not the identity vector");
  bool w_ok = ctx.differenced || ctx.w_vec == pointwise(k, ctx.u_vec, ctx.u_vec);
  if (!w_ok) r.notes.push_back("w differs from u o u");
  bool one_ok = ctx.L().eq(to_polynomial(ctx, ctx.one_coords), ctx.L().one());
  if (!one_ok) r.notes.push_back("stored coordinates of 1 do not reproduce 1");
  r.invariants = inv && w_ok && one_ok;

  std::mt19937_64 rng(seed);
  r.trials = trials;
  for (int t = 0; t < trials; ++t) {
    CVec x = random_element(ctx, rng), y = random_element(ctx, rng);
    if (nb_multiply(ctx, x, y) == oracle_multiply(ctx, x, y)) ++r.oracle_matches;
  }
  return r;
}

std::string render_report(const VerifyReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "theta matrix invertible: " << yn(r.invertible) << "\n";
  os << "galois conjugates: " << yn(r.conjugates) << "\n";
  os << "context invariants: " << yn(r.invariants) << "\n";
  os << "weight: " << r.weight << "\n";
  os << "weight <= 3n-2: " << yn(r.upper_bound) << "\n";
  os << "weight >= 2n-1: " << yn(r.lower_bound) << "\n";
  if (r.trials > 0) os << r.oracle_matches << "/" << r.trials << " oracle matches\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace nbasis
