#pragma once

#include <memory>
#include <optional>

#include "nbasis/context.hpp"
#include "nbasis/extension.hpp"
#include "nbasis/torus.hpp"

namespace nbasis {

using KPoint = TorusPoint<Field::Elem>;
using LPoint = TorusPoint<ExtField::Elem>;

struct LucasParams {
  FieldPtr base;                      // F_q, q odd
  u64 n = 0;                          // 1 < n < q + 1, n | q + 1
  std::optional<Field::Elem> alpha;   // default: smallest nonsquare
  std::optional<KPoint> generator;    // default: found by seeded search
  u64 seed = 0;
};

struct LucasConstants {
  Field::Elem c_frak, a_frak, b_frak;
};

struct Fiber {
  KPoly p_min;
  std::shared_ptr<const ExtField> L;
  ExtField::Elem y_b;
};

Field::Elem default_alpha(const Field& k);
// Checks q odd, alpha nonsquare, n a nontrivial divisor of q + 1.
void validate_lucas(const Field& k, Field::Elem alpha, u64 n);
bool is_torus_generator(const Field& k, Field::Elem alpha, const KPoint& P);
// Seeded search for a point of order q + 1; ExhaustedSearch on failure.
KPoint find_generator(const Field& k, Field::Elem alpha, u64 seed = 0);

// Degree-n factor P of Res_y(N_x - x(a), x^2 - alpha y^2 - 1) and y_b in L = K[theta]/(P)
// with b = (theta, y_b) on the torus and [n]b = a. Candidates are tried in
// lexicographic order. Errors: NoDegreeNFactor, SignCheckFailed.
Fiber fiber_field(const FieldPtr& base, Field::Elem alpha, u64 n, const KPoint& a, u64 seed = 0);

// sum_k u_{O,t}(Q - kt) at a non-pole point Q, with u_{O,t} = 1 + 1/(y - lambda (x - 1)).
Field::Elem lucas_c_constant(const Field& k, Field::Elem alpha, u64 n, const KPoint& t, const KPoint& Q);
LucasConstants canonical_constants(const Field& k, u64 n, Field::Elem c_frak);

// Errors: InvalidParameter, PointOffCurve, OrderTooSmall, NoDegreeNFactor,
// SignCheckFailed, NTorsionMismatch, ConstantCheckFailed, NotInvertible.
NormalBasisContext build_lucas_context(const LucasParams& params);

}  // namespace nbasis
