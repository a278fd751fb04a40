#pragma once

#include <optional>

#include "nbasis/context.hpp"

namespace nbasis {

struct AdditiveParams {
  FieldPtr base;                    // K, degree >= 2 over F_p
  std::optional<Field::Elem> a;     // default: smallest element of nonzero trace
  std::optional<Field::Elem> r;     // evaluation point x(R); default: class of X
};

// Smallest element (encoding order) with nonzero absolute trace; TraceZero if none.
Field::Elem default_additive_a(const Field& k);

// L = K[Y]/(Y^p - Y - a), theta_k = 1/(theta - k), u_R[k] = 1/(x(R) + k).
// Errors: TraceZero, EvaluationPointInPrimeField, NotInvertible.
NormalBasisContext build_additive_context(const AdditiveParams& params);

}  // namespace nbasis
