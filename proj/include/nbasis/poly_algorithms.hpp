#pragma once

#include <utility>
#include <vector>

#include "nbasis/field.hpp"
#include "nbasis/polynomial.hpp"

namespace nbasis {

using KPoly = poly::Poly<Field>;

// Distinct-degree sieve: gcd(f, X^{q^i} - X) = 1 for all i <= deg(f)/2.
bool poly_is_irreducible(const Field& k, const KPoly& f);

// Monic gcd over K.
inline KPoly poly_gcd(const Field& k, const KPoly& f, const KPoly& g) { return poly::gcd(k, f, g); }

struct Factor {
  KPoly poly;  // monic irreducible
  int multiplicity;
};

std::vector<Factor> squarefree_decomposition(const Field& k, const KPoly& f);
// For squarefree monic f: products of all irreducible factors of each degree.
std::vector<std::pair<KPoly, int>> distinct_degree_factor(const Field& k, const KPoly& f);
// Splits f (squarefree, all factors of degree d) into its irreducible factors.
std::vector<KPoly> equal_degree_factor(const Field& k, const KPoly& f, int d, u64 seed);

// Complete factorization of monic(f); factors sorted by (degree, lexicographic coefficients).
std::vector<Factor> poly_factor(const Field& k, const KPoly& f, u64 seed = 0);

// Polynomial from its integer coefficient list, reduced into the prime subfield of k.
KPoly poly_from_ints(const Field& k, const std::vector<i64>& c);
std::string poly_to_string(const Field& k, const KPoly& f);  // K-elements joined by ';'

}  // namespace nbasis
