#include "nbasis/bench.hpp"

#include <chrono>
#include <random>

#include "nbasis/additive.hpp"
#include "nbasis/error.hpp"
#include "nbasis/kummer.hpp"
#include "nbasis/lucas.hpp"
#include "nbasis/oracle.hpp"

namespace nbasis {

u64 bench_prime(GroupKind kind, u64 n) {
  switch (kind) {
    case GroupKind::Additive:
      if (!is_prime(n)) raise(ErrorCode::InvalidParameter, "additive degree must be a prime");
      return n;
    case GroupKind::Multiplicative:
      for (u64 q = 2 * n + 1;; q += 2 * n)
        if (is_prime(q)) return q;
    case GroupKind::Lucas:
      for (u64 q = 3;; q += 2)
        if (is_prime(q) && (q + 1) % n == 0 && n < q + 1) return q;
  }
  raise(ErrorCode::InvalidParameter, "unknown kind");
}

NormalBasisContext bench_context(GroupKind kind, u64 n, u64 seed) {
  if (n < 2) raise(ErrorCode::InvalidParameter, "bench degree must be >= 2");
  const u64 q = bench_prime(kind, n);
  switch (kind) {
    case GroupKind::Additive:
      return build_additive_context({Field::make(FieldSpec::for_order(q * q)), std::nullopt, std::nullopt});
    case GroupKind::Multiplicative:
      return build_kummer_context({Field::prime(q), n, (q - 1) / n, std::nullopt, std::nullopt});
    case GroupKind::Lucas:
      return build_lucas_context({Field::prime(q), n, std::nullopt, std::nullopt, seed});
  }
  raise(ErrorCode::InvalidParameter, "unknown kind");
}

BenchResult bench_multiply(const NormalBasisContext& ctx, ConvPath path, u64 seed, double min_seconds) {
  using clock = std::chrono::steady_clock;
  Engine engine(ctx, path);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<CVec, CVec>> inputs;
  for (int i = 0; i < 16; ++i) inputs.emplace_back(random_element(ctx, rng), random_element(ctx, rng));
  BenchResult r;
  r.n = ctx.n;
  r.q = ctx.k().order();
  r.path = engine.path();
  engine.multiply(inputs[0].first, inputs[0].second, &r.per_call);
  u64 calls = 0;
  Field::Elem sink = 0;
  const auto start = clock::now();
  double elapsed = 0;
  do {
    for (const auto& [x, y] : inputs) sink ^= engine.multiply(x, y)[0];
    calls += inputs.size();
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < min_seconds);
  r.checksum = sink;
  r.ns_per_multiply = elapsed * 1e9 / static_cast<double>(calls);
  return r;
}

}  // namespace nbasis
