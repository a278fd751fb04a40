#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nbasis/number_theory.hpp"

namespace nbasis {

// F_p, or K = F_p[X]/(g) when g is non-empty (monic, little-endian).
struct FieldSpec {
  u64 p = 2;
  std::vector<u64> g;

  int degree() const { return g.empty() ? 1 : static_cast<int>(g.size()) - 1; }
  std::string to_string() const;             // "p=5;g=2,3,0,1" or "p=61"
  static FieldSpec parse(const std::string& text);
  // Prime field for prime q, otherwise the smallest-lex monic irreducible of degree d.
  static FieldSpec for_order(u64 q);
  bool operator==(const FieldSpec&) const = default;
};

// Finite field with elements encoded as integers: c0 + c1*p + ... + c_{d-1}*p^{d-1}.
// Prime-field elements are therefore exactly 0..p-1.
class Field {
 public:
  using Elem = u64;

  explicit Field(FieldSpec spec);
  static std::shared_ptr<const Field> make(const FieldSpec& spec);
  static std::shared_ptr<const Field> prime(u64 p) { return make(FieldSpec{p, {}}); }

  const FieldSpec& spec() const { return spec_; }
  u64 characteristic() const { return p_; }
  int degree() const { return d_; }
  u64 order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(i64 v) const;
  Elem from_base(Elem c) const { return c; }  // uniform interface with ExtField
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // DivisionByZero on zero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u128 e) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const;  // lexicographic on (c0, c1, ...)

  bool in_prime_field(Elem a) const { return a < p_; }
  Elem frobenius(Elem a) const { return pow(a, p_); }
  u64 trace(Elem a) const;  // absolute trace to F_p
  Elem epsilon() const { return d_ > 1 ? p_ : 0; }  // class of X
  // Smallest element (in encoding order) generating the multiplicative group.
  Elem primitive_element() const { return generator_; }
  bool is_valid(Elem a) const { return a < q_; }
  Elem nth(u64 i) const { return i % q_; }  // enumeration of all elements

  std::vector<u64> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<u64>& c) const;  // pads short input, rejects long
  std::string format(Elem a) const;                   // "c0,c1,...", d entries
  Elem parse(const std::string& text) const;          // ParseError

 private:
  Elem mul_slow(Elem a, Elem b) const;
  Elem find_generator() const;

  FieldSpec spec_;
  u64 p_;
  int d_;
  u64 q_;
  std::vector<u64> pw_;  // p^i
  // Discrete log tables for small extension fields.
  std::vector<std::uint32_t> exp_, log_;
  Elem generator_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

// Checked value type: arithmetic between elements of different fields
// raises SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Elem v);
  static FieldElement parse(FieldPtr field, const std::string& text);

  const FieldPtr& field() const { return field_; }
  Field::Elem value() const { return v_; }
  std::vector<u64> coeffs() const { return field_->coeffs(v_); }
  std::string to_string() const { return field_->format(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(u128 e) const;
  bool operator==(const FieldElement& o) const;

 private:
  void check(const FieldElement& o) const;
  FieldPtr field_;
  Field::Elem v_;
};

}  // namespace nbasis
