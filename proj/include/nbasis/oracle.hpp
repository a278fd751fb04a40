#pragma once

#include <random>
#include <string>
#include <vector>

#include "nbasis/context.hpp"

namespace nbasis {

// sum_k x_k theta_k in the power basis of L.
ExtField::Elem to_polynomial(const NormalBasisContext& ctx, const CVec& x);
// Theta-coordinates of z.
CVec from_polynomial(const NormalBasisContext& ctx, const ExtField::Elem& z);
// Ground-truth product through the power basis.
CVec oracle_multiply(const NormalBasisContext& ctx, const CVec& x, const CVec& y);
// Coordinates of x^{|K|^e}.
CVec oracle_frobenius(const NormalBasisContext& ctx, const CVec& x, u64 e = 1);

// Row i: Theta-coordinates of theta_0 * theta_i.
struct StructureConstants {
  std::vector<CVec> rows;
};
StructureConstants structure_constants(const NormalBasisContext& ctx);
// Nonzero entries over all rows, the theta_0^2 row included.
int compute_weight(const NormalBasisContext& ctx);

struct VerifyReport {
  bool invertible = false;
  bool conjugates = false;   // theta_k are the Galois conjugates of theta_0
  bool upper_bound = false;  // weight <= 3n - 2
  bool lower_bound = false;  // weight >= 2n - 1
  bool invariants = false;   // u * u^{-1} = e_0, w = u o u (non-differenced), sum of one-coords
  int weight = 0;
  int trials = 0;
  int oracle_matches = 0;
  std::vector<std::string> notes;
  bool ok() const {
    return invertible && conjugates && upper_bound && lower_bound && invariants && oracle_matches == trials;
  }
};

// Structural checks plus `trials` seeded oracle-equivalence multiplications.
VerifyReport verify_normal(const NormalBasisContext& ctx, int trials = 0, u64 seed = 0);
std::string render_report(const VerifyReport& r);

CVec random_element(const NormalBasisContext& ctx, std::mt19937_64& rng);

}  // namespace nbasis
