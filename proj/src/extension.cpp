#include "nbasis/extension.hpp"

#include "nbasis/error.hpp"
#include "nbasis/text_format.hpp"

namespace nbasis {

ExtField::ExtField(FieldPtr base, KPoly modulus) : k_(std::move(base)), modulus_(std::move(modulus)) {
  poly::trim(*k_, modulus_);
  n_ = poly::degree(modulus_);
  if (n_ < 1) raise(ErrorCode::InvalidParameter, "extension modulus must have degree >= 1");
  if (modulus_.back() != k_->one()) raise(ErrorCode::InvalidParameter, "extension modulus must be monic");
}

u128 ExtField::order() const { return checked_pow128(k_->order(), n_); }

ExtField::Elem ExtField::from_base(Field::Elem c) const {
  Elem r(n_, 0);
  r[0] = c;
  return r;
}

ExtField::Elem ExtField::theta() const {
  if (n_ == 1) return from_base(k_->neg(modulus_[0]));
  Elem r(n_, 0);
  r[1] = k_->one();
  return r;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = k_->add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = k_->sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = k_->neg(a[i]);
  return r;
}

ExtField::Elem ExtField::scale(Field::Elem c, const Elem& a) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = k_->mul(c, a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  return from_poly(poly::mul(*k_, to_poly(a), to_poly(b)));
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) raise(ErrorCode::DivisionByZero, "inverse of zero in extension field");
  return from_poly(poly::invmod(*k_, to_poly(a), modulus_));
}

ExtField::Elem ExtField::pow(Elem a, u128 e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

bool ExtField::less(const Elem& a, const Elem& b) const {
  for (int i = 0; i < n_; ++i) {
    if (a[i] == b[i]) continue;
    return k_->less(a[i], b[i]);
  }
  return false;
}

bool ExtField::in_base(const Elem& a) const {
  for (int i = 1; i < n_; ++i)
    if (a[i]) return false;
  return true;
}

ExtField::Elem ExtField::nth(u64 i) const {
  Elem r(n_, 0);
  for (int j = 0; j < n_ && i; ++j) {
    r[j] = i % k_->order();
    i /= k_->order();
  }
  return r;
}

KPoly ExtField::to_poly(const Elem& a) const {
  KPoly r(a);
  poly::trim(*k_, r);
  return r;
}

ExtField::Elem ExtField::from_poly(const KPoly& f) const {
  KPoly r = static_cast<int>(f.size()) > n_ ? poly::mod(*k_, f, modulus_) : f;
  r.resize(n_, 0);
  return r;
}

ExtField::Elem ExtField::parse(const std::string& text) const {
  auto v = text::parse_vector(*k_, text);
  if (static_cast<int>(v.size()) > n_) raise(ErrorCode::ParseError, "extension element has too many coefficients");
  v.resize(n_, 0);
  return v;
}

}  // namespace nbasis
