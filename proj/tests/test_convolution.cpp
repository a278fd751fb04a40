#include "test_util.hpp"

#include "nbasis/convolution.hpp"

using namespace nbasis;
using nbasis::testing::random_vec;

namespace {

std::vector<FieldPtr> conv_fields() {
  return {Field::prime(5), Field::prime(7), Field::prime(61), Field::make(FieldSpec::for_order(8)),
          Field::make(FieldSpec::parse("p=5;g=2,3,0,1"))};
}

}  // namespace

TEST_CASE("convolution examples") {
  auto k61 = Field::prime(61);
  CVec u{1, 9, 21, 20, 22, 52}, v{1, 3, 1, 1, 2, 1};
  for (auto path : {ConvPath::Naive, ConvPath::Karatsuba, ConvPath::Ntt, ConvPath::Auto})
    CHECK(convolve(*k61, u, v, path) == CVec{6, 25, 43, 36, 44, 56});
  CHECK(convolve_inverse(*k61, u) == CVec{43, 11, 37, 55, 46, 32});

  auto k5 = Field::prime(5);
  CHECK(convolve(*k5, {4, 4, 2, 3, 1}, {2, 3, 1, 4, 4}) == CVec{3, 1, 1, 1, 0});
  CHECK(pointwise(*k5, {1, 3, 1, 1, 2}, {2, 1, 1, 4, 2}) == CVec{2, 3, 1, 4, 4});

  auto k7 = Field::prime(7);
  CHECK_RAISES(convolve_inverse(*k7, {1, 6, 0, 0}), ErrorCode::NotInvertible);  // 1 - X vanishes at 1
  CHECK_RAISES(convolve(*k7, {1, 2}, {1, 2, 3}), ErrorCode::LengthMismatch);
  CHECK_RAISES(pointwise(*k7, {1, 2}, {1}), ErrorCode::LengthMismatch);
}

TEST_CASE("shift and unit vectors") {
  CHECK(shift(CVec{1, 2, 3, 4}, 1) == CVec{4, 1, 2, 3});
  CHECK(shift(CVec{1, 2, 3, 4}, -1) == CVec{2, 3, 4, 1});
  CHECK(shift(CVec{1, 2, 3, 4}, 6) == CVec{3, 4, 1, 2});
  CHECK(unit_vector(4, 2) == CVec{0, 0, 1, 0});
  auto k = Field::prime(7);
  // sigma(u) = u * e_1
  CVec u{3, 1, 4, 1, 5};
  CHECK(convolve(*k, u, unit_vector(5, 1)) == shift(u, 1));
}

TEST_CASE("NTT availability and roots") {
  auto k61 = Field::prime(61);
  CHECK(NttPlan::available(*k61, 6));
  CHECK(NttPlan::available(*k61, 60));
  CHECK_FALSE(NttPlan::available(*k61, 7));
  CHECK_RAISES(NttPlan(*k61, 7), ErrorCode::BadRootOfUnity);
  NttPlan plan(*k61, 12);
  CHECK(k61->pow(plan.root(), 12) == 1);
  CHECK(k61->pow(plan.root(), 6) != 1);
  CHECK(k61->pow(plan.root(), 4) != 1);
  std::mt19937_64 rng(4);
  auto a = random_vec(*k61, 12, rng);
  CHECK(plan.inverse(*k61, plan.forward(*k61, a)) == a);
  CHECK(Convolver(k61, 6).path() == ConvPath::Naive);
  CHECK(Convolver(k61, 60).path() == ConvPath::Ntt);
  CHECK(Convolver(Field::prime(7), 40).path() == ConvPath::Karatsuba);
  CHECK_RAISES(parse_conv_path("fft"), ErrorCode::ParseError);
  CHECK(parse_conv_path("ntt") == ConvPath::Ntt);
}

TEST_CASE("group-ring algebra on random vectors") {
  std::mt19937_64 rng(8);
  for (const auto& kp : conv_fields()) {
    const Field& k = *kp;
    for (std::size_t n = 1; n <= 40; ++n) {
      auto a = random_vec(k, n, rng), b = random_vec(k, n, rng), c = random_vec(k, n, rng);
      CHECK(convolve(k, a, b) == convolve(k, b, a));
      CHECK(convolve(k, convolve(k, a, b), c) == convolve(k, a, convolve(k, b, c)));
      CHECK(convolve(k, a, vec_add(k, b, c)) == vec_add(k, convolve(k, a, b), convolve(k, a, c)));
      CHECK(convolve(k, a, unit_vector(n)) == a);
      // sigma commutes with convolution
      CHECK(shift(convolve(k, a, b), 1) == convolve(k, shift(a, 1), b));
      CHECK(vec_sub(k, vec_add(k, a, b), b) == a);
      CHECK(vec_scale(k, k.one(), a) == a);
    }
  }
}

TEST_CASE("fast paths agree with the schoolbook product") {
  std::mt19937_64 rng(12);
  for (const auto& kp : conv_fields()) {
    const Field& k = *kp;
    for (std::size_t n = 2; n <= 64; ++n) {
      for (int t = 0; t < 3; ++t) {
        auto a = random_vec(k, n, rng), b = random_vec(k, n, rng);
        auto ref = convolve_naive(k, a, b);
        CHECK(convolve_karatsuba(k, a, b) == ref);
        if (NttPlan::available(k, n)) CHECK(NttPlan(k, n).convolve(k, a, b) == ref);
        CHECK(Convolver(kp, n).convolve(a, b) == ref);
      }
    }
  }
}

TEST_CASE("convolution inverse property") {
  std::mt19937_64 rng(13);
  int inverted = 0, refused = 0;
  for (const auto& kp : conv_fields()) {
    const Field& k = *kp;
    for (std::size_t n = 1; n <= 30; ++n) {
      auto u = random_vec(k, n, rng);
      try {
        auto v = convolve_inverse(k, u);
        CHECK(convolve(k, u, v) == unit_vector(n));
        ++inverted;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInvertible);
        ++refused;
      }
    }
  }
  CHECK(inverted > 0);
  MESSAGE("inverted " << inverted << ", refused " << refused);
}
