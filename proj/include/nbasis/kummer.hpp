#pragma once

#include <optional>

#include "nbasis/context.hpp"

namespace nbasis {

struct KummerParams {
  FieldPtr base;                       // K = F_q
  u64 n = 0;                           // extension degree >= 2
  u64 m = 0;                           // cofactor >= 2 with mn | q - 1
  std::optional<Field::Elem> a;        // default: smallest generator of K*
  std::optional<Field::Elem> zeta_mn;  // default: g^{(q-1)/(mn)}
};

// L = K[X]/(X^n - a), theta_k = 1/(zeta_n^{-k} theta - 1), u_R[j] = 1/(zeta_mn zeta_n^j - 1).
// Errors: InvalidParameter, ZeroElement, OrderTooSmall, BadRootOfUnity, NotInvertible.
NormalBasisContext build_kummer_context(const KummerParams& params);

}  // namespace nbasis
