#pragma once

#include <vector>

#include "nbasis/field.hpp"
#include "nbasis/poly_algorithms.hpp"

namespace nbasis {

// Dense bivariate polynomial over K: coeff(i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  Field::Elem coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Field::Elem c);
  void add_term(const Field& k, std::size_t i, std::size_t j, Field::Elem c);
  int degree_x() const;
  int degree_y() const;
  bool is_zero() const { return degree_x() < 0; }
  // Coefficients with respect to y: entry j is a polynomial in x.
  std::vector<KPoly> as_poly_in_y(const Field& k) const;
  std::vector<KPoly> as_poly_in_x(const Field& k) const;
  Field::Elem eval(const Field& k, Field::Elem x, Field::Elem y) const;

 private:
  std::vector<std::vector<Field::Elem>> c_;  // c_[i][j]
};

enum class Var { X, Y };

// Res_var(f, g) as a polynomial in the other variable. Uses Euclidean
// reduction while a leading coefficient is a unit and falls back to the
// fraction-free Sylvester determinant otherwise. DegenerateInput when either
// input has degree 0 in var.
KPoly resultant_eliminate(const Field& k, const BiPoly& f, const BiPoly& g, Var var);

// Both routes on polynomials in an outer variable with K[x] coefficients.
KPoly resultant_sylvester(const Field& k, const std::vector<KPoly>& a, const std::vector<KPoly>& b);
KPoly resultant_euclid(const Field& k, const std::vector<KPoly>& a, const std::vector<KPoly>& b);

}  // namespace nbasis
