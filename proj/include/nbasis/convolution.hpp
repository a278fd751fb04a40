#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nbasis/field.hpp"

namespace nbasis {

// Length-n vector over K, indices taken mod n.
using CVec = std::vector<Field::Elem>;

enum class ConvPath { Auto, Naive, Karatsuba, Ntt };

ConvPath parse_conv_path(const std::string& s);  // ParseError
const char* conv_path_name(ConvPath p);

// Below this length Auto uses the schoolbook product.
constexpr std::size_t kAutoNaiveBelow = 32;

CVec convolve_naive(const Field& k, const CVec& u, const CVec& v);
CVec convolve_karatsuba(const Field& k, const CVec& u, const CVec& v);

// Mixed-radix number-theoretic transform of length n; requires n | |K| - 1.
class NttPlan {
 public:
  NttPlan(const Field& k, std::size_t n);  // BadRootOfUnity when n does not divide |K| - 1
  static bool available(const Field& k, std::size_t n);
  CVec convolve(const Field& k, const CVec& u, const CVec& v) const;
  CVec forward(const Field& k, const CVec& a) const;
  CVec inverse(const Field& k, const CVec& a) const;
  Field::Elem root() const { return omega_; }

 private:
  void dft(const Field& k, const Field::Elem* in, std::size_t stride, std::size_t len, const std::vector<Field::Elem>& pw,
           Field::Elem* out) const;
  std::size_t n_;
  Field::Elem omega_;
  Field::Elem n_inv_;
  std::vector<Field::Elem> pw_, pw_inv_;  // omega^i, omega^{-i}
  std::vector<std::size_t> radices_;
};

// Cyclic convolution with a fixed length and path; caches the transform plan.
class Convolver {
 public:
  Convolver(FieldPtr k, std::size_t n, ConvPath path = ConvPath::Auto);
  CVec convolve(const CVec& u, const CVec& v) const;
  ConvPath path() const { return path_; }  // resolved, never Auto
  std::size_t size() const { return n_; }
  const Field& field() const { return *k_; }

 private:
  FieldPtr k_;
  std::size_t n_;
  ConvPath path_;
  std::shared_ptr<const NttPlan> ntt_;
};

// (u * v)_k = sum_i u_i v_{k-i}; LengthMismatch on unequal lengths.
CVec convolve(const Field& k, const CVec& u, const CVec& v, ConvPath path = ConvPath::Auto);
// v with u * v = e_0, via extended Euclid against X^n - 1; NotInvertible otherwise.
CVec convolve_inverse(const Field& k, const CVec& u);
CVec pointwise(const Field& k, const CVec& u, const CVec& v);
// sigma^s: result_k = u_{k-s}.
CVec shift(const CVec& u, long s = 1);
CVec vec_add(const Field& k, const CVec& u, const CVec& v);
CVec vec_sub(const Field& k, const CVec& u, const CVec& v);
CVec vec_scale(const Field& k, Field::Elem c, const CVec& u);
CVec unit_vector(std::size_t n, std::size_t i = 0);

}  // namespace nbasis
