#pragma once

#include "nbasis/context.hpp"
#include "nbasis/engine.hpp"

namespace nbasis {

// Smallest prime q admitting a context of the given kind and degree n:
// kummer needs 2n | q - 1, lucas needs n | q + 1 with n < q + 1, additive uses p = n.
u64 bench_prime(GroupKind kind, u64 n);
NormalBasisContext bench_context(GroupKind kind, u64 n, u64 seed = 0);

struct BenchResult {
  u64 n = 0;
  u64 q = 0;
  ConvPath path = ConvPath::Auto;
  double ns_per_multiply = 0;
  MultiplyStats per_call;
  Field::Elem checksum = 0;  // keeps the timed work observable
};

// Repeats seeded random multiplications until at least min_seconds elapse.
BenchResult bench_multiply(const NormalBasisContext& ctx, ConvPath path, u64 seed, double min_seconds = 0.05);

}  // namespace nbasis
