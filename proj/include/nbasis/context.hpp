#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nbasis/convolution.hpp"
#include "nbasis/extension.hpp"
#include "nbasis/field.hpp"
#include "nbasis/matrix.hpp"
#include "nbasis/torus.hpp"

namespace nbasis {

enum class GroupKind { Additive, Multiplicative, Lucas };

const char* kind_name(GroupKind k);      // "additive" | "kummer" | "lucas"
GroupKind parse_kind(const std::string&);  // accepts "multiplicative" as an alias of "kummer"

// Inputs that determine a context; enough to rebuild it bit-exactly.
struct ContextParams {
  std::optional<Field::Elem> a;                    // additive / kummer
  std::optional<Field::Elem> r;                    // additive evaluation point x(R)
  std::optional<u64> m;                            // kummer cofactor
  std::optional<Field::Elem> zeta_mn;              // kummer
  std::optional<Field::Elem> alpha;                // lucas
  std::optional<TorusPoint<Field::Elem>> generator;  // lucas
  u64 seed = 0;                                    // factorization randomness
};

// Diagnostic values produced by the Lucas construction.
struct LucasData {
  TorusPoint<Field::Elem> t;        // generator of the n-torsion
  ExtField::Elem y_b;               // b = (theta, y_b)
  Field::Elem c_frak, a_frak, b_frak;
};

struct NormalBasisContext {
  GroupKind kind = GroupKind::Additive;
  FieldPtr base;
  std::size_t n = 0;
  ContextParams params;

  CVec i_vec, u_vec, u_inv_vec, w_vec;
  Field::Elem scale = 1;
  bool differenced = false;

  // Oracle data: L = K[x]/(l_poly), theta[k] = k-th basis element in the power basis.
  KPoly l_poly;
  std::vector<ExtField::Elem> theta;
  CVec one_coords;
  // Frobenius x -> x^{|K|} acts on coordinates as the cyclic shift by this amount (-1 if none).
  long frobenius_shift = -1;
  std::optional<LucasData> lucas;

  // Derived by finalize_context.
  std::shared_ptr<const ExtField> ext;
  Matrix<Field> theta_matrix;  // row k = coefficients of theta[k]
  Matrix<Field> theta_inverse;
  std::shared_ptr<const Convolver> convolver;  // Auto path

  const Field& k() const { return *base; }
  const ExtField& L() const { return *ext; }
};

// Builds ext, the theta matrix and its inverse (SingularMatrix), the
// coordinates of 1, the Frobenius shift and the default convolver.
void finalize_context(NormalBasisContext& ctx);

// Rebuilds a context from kind, base field, n and the parameter echo.
NormalBasisContext rederive_context(const NormalBasisContext& ctx);
// True when the stored vectors and oracle data equal a fresh rederivation.
bool same_derived_data(const NormalBasisContext& a, const NormalBasisContext& b);

}  // namespace nbasis
