#pragma once

#include <doctest.h>

#include <random>

#include "nbasis/error.hpp"
#include "nbasis/field.hpp"

// Expect a library Error carrying the given code.
#define CHECK_RAISES(expr, ecode)                                   \
  do {                                                              \
    bool caught_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const nbasis::Error& e_) {                             \
      caught_ = true;                                               \
      CHECK_MESSAGE(e_.code() == (ecode), std::string(e_.what()));               \
    }                                                               \
    CHECK_MESSAGE(caught_, (std::string("expected ") + nbasis::error_name(ecode) + " from " #expr)); \
  } while (0)

namespace nbasis::testing {

inline Field::Elem random_elem(const Field& k, std::mt19937_64& rng) {
  return std::uniform_int_distribution<u64>(0, k.order() - 1)(rng);
}

inline std::vector<Field::Elem> random_vec(const Field& k, std::size_t n, std::mt19937_64& rng) {
  std::vector<Field::Elem> v(n);
  for (auto& c : v) c = random_elem(k, rng);
  return v;
}

}  // namespace nbasis::testing
