#pragma once

#include "nbasis/context.hpp"

namespace nbasis {

struct MultiplyStats {
  int convolutions = 0;
  int pointwise = 0;
};

// Normal-basis multiplication kernel bound to one context and one convolution path.
class Engine {
 public:
  explicit Engine(const NormalBasisContext& ctx, ConvPath path = ConvPath::Auto);
  CVec multiply(const CVec& x, const CVec& y, MultiplyStats* stats = nullptr) const;
  ConvPath path() const { return conv_.path(); }

 private:
  const NormalBasisContext& ctx_;
  Convolver conv_;
};

// s*(i * d) + u^{-1} * [ (u * x) o (u * y) - s*(w * d) ], with d = x o y, or
// (x - sigma x) o (y - sigma y) for differenced contexts. SpecMismatch on wrong lengths.
CVec nb_multiply(const NormalBasisContext& ctx, const CVec& x, const CVec& y, MultiplyStats* stats = nullptr);
CVec nb_add(const NormalBasisContext& ctx, const CVec& x, const CVec& y);
// k-fold cyclic shift of coordinates.
CVec nb_frobenius(const NormalBasisContext& ctx, const CVec& x, long k);

}  // namespace nbasis
