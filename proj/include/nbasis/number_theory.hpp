#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nbasis {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if (((a | b) >> 32) == 0) return a * b % m;  // common case, no 128-bit division
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);  // throws DivisionByZero when gcd(a, m) != 1
u64 gcd_u64(u64 a, u64 b);

bool is_prime(u64 n);  // trial division
// Prime factorization by trial division, ascending primes with multiplicities.
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);
// q = p^d with p prime, or nullopt.
std::optional<std::pair<u64, int>> prime_power(u64 q);

// Checked arithmetic for cardinalities; throw InvalidParameter on overflow.
u64 checked_pow(u64 base, int exp);
u128 checked_pow128(u64 base, int exp);

// Row n of Pascal's triangle reduced mod p.
std::vector<u64> pascal_row_mod(u64 n, u64 p);

}  // namespace nbasis
