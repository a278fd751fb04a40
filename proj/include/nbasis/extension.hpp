#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nbasis/field.hpp"
#include "nbasis/poly_algorithms.hpp"

namespace nbasis {

// L = K[x]/(P) with P monic of degree n; elements are length-n coefficient vectors over K.
class ExtField {
 public:
  using Elem = std::vector<Field::Elem>;

  ExtField(FieldPtr base, KPoly modulus);

  const Field& base() const { return *k_; }
  const FieldPtr& base_ptr() const { return k_; }
  const KPoly& modulus() const { return modulus_; }
  int degree() const { return n_; }
  // |L| = q^n; InvalidParameter if it exceeds 128 bits.
  u128 order() const;

  Elem zero() const { return Elem(n_, 0); }
  Elem one() const { return from_base(k_->one()); }
  Elem from_int(i64 v) const { return from_base(k_->from_int(v)); }
  Elem from_base(Field::Elem c) const;
  Elem theta() const;  // class of x

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(Field::Elem c, const Elem& a) const;
  Elem inv(const Elem& a) const;  // DivisionByZero
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u128 e) const;
  Elem frobenius(const Elem& a) const { return pow(a, k_->order()); }  // a^{|K|}
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool less(const Elem& a, const Elem& b) const;
  bool in_base(const Elem& a) const;
  Elem nth(u64 i) const;  // base-|K| digits of i as coefficients

  KPoly to_poly(const Elem& a) const;
  Elem from_poly(const KPoly& f) const;  // reduces mod P
  std::string format(const Elem& a) const { return poly_to_string(*k_, a); }
  Elem parse(const std::string& text) const;

 private:
  FieldPtr k_;
  KPoly modulus_;
  int n_;
};

}  // namespace nbasis
