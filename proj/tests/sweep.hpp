#pragma once

#include <string>
#include <vector>

#include "nbasis/additive.hpp"
#include "nbasis/kummer.hpp"
#include "nbasis/lucas.hpp"

namespace nbasis::testing {

struct SweepCase {
  std::string label;
  GroupKind kind;
  FieldPtr base;
  u64 n = 0, m = 0;
};

// additive: p in {3,5,7,11,13} with quadratic and cubic K
// kummer:   prime powers q <= 64, all n, m >= 2 with mn | q - 1
// lucas:    odd prime powers q <= 50, all n | q + 1 with 1 < n < q + 1
inline std::vector<SweepCase> sweep_cases() {
  std::vector<SweepCase> out;
  for (u64 p : {3, 5, 7, 11, 13})
    for (int d : {2, 3}) {
      auto k = Field::make(FieldSpec::for_order(checked_pow(p, d)));
      out.push_back({"additive p=" + std::to_string(p) + " d=" + std::to_string(d), GroupKind::Additive, k, p, 0});
    }
  for (u64 q = 2; q <= 64; ++q) {
    if (!prime_power(q)) continue;
    FieldPtr k;
    for (u64 n = 2; n <= q - 1; ++n)
      for (u64 m = 2; m * n <= q - 1; ++m) {
        if ((q - 1) % (m * n)) continue;
        if (!k) k = Field::make(FieldSpec::for_order(q));
        out.push_back({"kummer q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                       GroupKind::Multiplicative, k, n, m});
      }
  }
  for (u64 q = 3; q <= 50; q += 2) {
    if (!prime_power(q)) continue;
    auto k = Field::make(FieldSpec::for_order(q));
    for (u64 n = 2; n < q + 1; ++n)
      if ((q + 1) % n == 0)
        out.push_back({"lucas q=" + std::to_string(q) + " n=" + std::to_string(n), GroupKind::Lucas, k, n, 0});
  }
  return out;
}

inline NormalBasisContext build_case(const SweepCase& c) {
  switch (c.kind) {
    case GroupKind::Additive: return build_additive_context({c.base, std::nullopt, std::nullopt});
    case GroupKind::Multiplicative: return build_kummer_context({c.base, c.n, c.m, std::nullopt, std::nullopt});
    case GroupKind::Lucas: return build_lucas_context({c.base, c.n, std::nullopt, std::nullopt, 0});
  }
  return {};
}

}  // namespace nbasis::testing
