#include "nbasis/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nbasis/error.hpp"

namespace nbasis {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 invmod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    i64 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) raise(ErrorCode::DivisionByZero, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto& [p, e] : factorize(n)) {
    std::size_t len = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < len; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<u64, int>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

u64 checked_pow(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base)
      raise(ErrorCode::InvalidParameter, "cardinality overflows 64 bits");
    r *= base;
  }
  return r;
}

u128 checked_pow128(u64 base, int exp) {
  u128 r = 1;
  const u128 max = ~static_cast<u128>(0);
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > max / base) raise(ErrorCode::InvalidParameter, "cardinality overflows 128 bits");
    r *= base;
  }
  return r;
}

std::vector<u64> pascal_row_mod(u64 n, u64 p) {
  std::vector<u64> row{1 % p};
  for (u64 i = 1; i <= n; ++i) {
    row.push_back(1 % p);
    for (u64 k = i - 1; k >= 1; --k) row[k] = (row[k] + row[k - 1]) % p;
  }
  return row;
}

}  // namespace nbasis
