#include "nbasis/poly_algorithms.hpp"

#include <algorithm>
#include <random>

#include "nbasis/text_format.hpp"

namespace nbasis {

namespace {

KPoly x_poly(const Field& k) { return poly::x_pow(k, 1); }

KPoly frobenius_x(const Field& k, const KPoly& h, const KPoly& f) { return poly::powmod(k, h, k.order(), f); }

// p-th root of a polynomial whose exponents are all multiples of p.
KPoly pth_root(const Field& k, const KPoly& c) {
  const u64 p = k.characteristic();
  const u128 root_exp = k.order() / p;  // a -> a^{q/p} inverts the p-power map on K
  KPoly r;
  for (std::size_t i = 0; i < c.size(); i += p) r.push_back(k.pow(c[i], root_exp));
  poly::trim(k, r);
  return r;
}

bool sort_key_less(const Field& k, const KPoly& a, const KPoly& b) { return poly::lex_less(k, a, b); }

KPoly random_poly(const Field& k, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, k.order() - 1);
  KPoly r(len);
  for (auto& c : r) c = dist(rng);
  poly::trim(k, r);
  return r;
}

}  // namespace

bool poly_is_irreducible(const Field& k, const KPoly& f_in) {
  KPoly f = poly::monic(k, f_in);
  const int n = poly::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const KPoly x = x_poly(k);
  KPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = frobenius_x(k, h, f);
    auto g = poly::gcd(k, poly::sub(k, h, x), f);
    if (poly::degree(g) != 0) return false;
  }
  return true;
}

std::vector<Factor> squarefree_decomposition(const Field& k, const KPoly& f_in) {
  std::vector<Factor> out;
  KPoly f = poly::monic(k, f_in);
  if (poly::degree(f) < 1) return out;
  const int p = static_cast<int>(k.characteristic());
  const KPoly one = poly::constant(k, k.one());
  KPoly g = poly::derivative(k, f);
  if (g.empty()) {
    for (auto& fa : squarefree_decomposition(k, pth_root(k, f))) out.push_back({fa.poly, fa.multiplicity * p});
    return out;
  }
  KPoly c = poly::gcd(k, f, g);
  KPoly w = poly::divmod(k, f, c).first;
  int i = 1;
  while (poly::degree(w) > 0) {
    KPoly y = poly::gcd(k, w, c);
    KPoly fac = poly::divmod(k, w, y).first;
    if (poly::degree(fac) > 0) out.push_back({poly::monic(k, fac), i});
    ++i;
    w = y;
    c = poly::divmod(k, c, y).first;
  }
  if (poly::degree(c) > 0) {
    for (auto& fa : squarefree_decomposition(k, pth_root(k, c))) out.push_back({fa.poly, fa.multiplicity * p});
  }
  return out;
}

std::vector<std::pair<KPoly, int>> distinct_degree_factor(const Field& k, const KPoly& f_in) {
  std::vector<std::pair<KPoly, int>> out;
  KPoly f = poly::monic(k, f_in);
  const KPoly x = x_poly(k);
  KPoly h = x;
  int i = 0;
  while (poly::degree(f) >= 2 * (i + 1)) {
    ++i;
    h = frobenius_x(k, poly::mod(k, h, f), f);
    KPoly g = poly::gcd(k, poly::sub(k, h, x), f);
    if (poly::degree(g) > 0) {
      out.emplace_back(g, i);
      f = poly::divmod(k, f, g).first;
      h = poly::mod(k, h, f);
    }
  }
  if (poly::degree(f) > 0) out.emplace_back(f, poly::degree(f));
  return out;
}

namespace {

// Splitting polynomial whose gcd with f is a proper factor with probability about 1/2.
KPoly splitter(const Field& k, const KPoly& f, int d, std::mt19937_64& rng) {
  const std::size_t n = static_cast<std::size_t>(poly::degree(f));
  KPoly h = random_poly(k, n, rng);
  if (poly::degree(h) < 1) return {};
  if (k.characteristic() == 2) {
    // Absolute trace from F_{q^d} to F_2: sum of h^{2^i}.
    const int steps = k.degree() * d;
    KPoly t = h, acc = h;
    for (int i = 1; i < steps; ++i) {
      t = poly::mulmod(k, t, t, f);
      acc = poly::add(k, acc, t);
    }
    return acc;
  }
  // h^{(q^d-1)/2} = (h * h^q * ... * h^{q^{d-1}})^{(q-1)/2}
  KPoly norm = h, t = h;
  for (int i = 1; i < d; ++i) {
    t = frobenius_x(k, t, f);
    norm = poly::mulmod(k, norm, t, f);
  }
  KPoly g = poly::powmod(k, norm, (k.order() - 1) / 2, f);
  return poly::sub(k, g, poly::constant(k, k.one()));
}

void edf_rec(const Field& k, const KPoly& f, int d, std::mt19937_64& rng, std::vector<KPoly>& out) {
  const int n = poly::degree(f);
  if (n <= d) {
    out.push_back(poly::monic(k, f));
    return;
  }
  for (int attempt = 0; attempt < 4096; ++attempt) {
    KPoly s = splitter(k, f, d, rng);
    if (s.empty()) continue;
    KPoly g = poly::gcd(k, s, f);
    const int dg = poly::degree(g);
    if (dg > 0 && dg < n) {
      edf_rec(k, g, d, rng, out);
      edf_rec(k, poly::divmod(k, f, g).first, d, rng, out);
      return;
    }
  }
  raise(ErrorCode::ExhaustedSearch, "equal-degree splitting did not converge");
}

}  // namespace

std::vector<KPoly> equal_degree_factor(const Field& k, const KPoly& f, int d, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<KPoly> out;
  edf_rec(k, poly::monic(k, f), d, rng, out);
  std::sort(out.begin(), out.end(), [&](const KPoly& a, const KPoly& b) { return sort_key_less(k, a, b); });
  return out;
}

std::vector<Factor> poly_factor(const Field& k, const KPoly& f, u64 seed) {
  std::vector<Factor> out;
  if (poly::degree(f) < 1) return out;
  for (const auto& sq : squarefree_decomposition(k, f)) {
    for (const auto& [prod, d] : distinct_degree_factor(k, sq.poly)) {
      for (auto& fac : equal_degree_factor(k, prod, d, seed)) out.push_back({fac, sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Factor& a, const Factor& b) {
    if (poly::equal(k, a.poly, b.poly)) return a.multiplicity < b.multiplicity;
    return sort_key_less(k, a.poly, b.poly);
  });
  return out;
}

KPoly poly_from_ints(const Field& k, const std::vector<i64>& c) {
  KPoly r;
  for (auto v : c) r.push_back(k.from_int(v));
  poly::trim(k, r);
  return r;
}

std::string poly_to_string(const Field& k, const KPoly& f) { return text::format_vector(k, f); }

}  // namespace nbasis
