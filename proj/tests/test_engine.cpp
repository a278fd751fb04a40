#include "test_util.hpp"

#include <cstdio>
#include <fstream>

#include "nbasis/bench.hpp"
#include "nbasis/context_file.hpp"
#include "nbasis/engine.hpp"
#include "nbasis/oracle.hpp"
#include "sweep.hpp"

using namespace nbasis;

namespace {

// A few contexts of each kind, large enough to hit every convolution path.
std::vector<NormalBasisContext> sample_contexts() {
  std::vector<NormalBasisContext> out;
  for (u64 p : {3u, 7u}) out.push_back(build_additive_context({Field::make(FieldSpec::for_order(p * p)), {}, {}}));
  out.push_back(build_additive_context({Field::make(FieldSpec::for_order(37 * 37)), {}, {}}));
  out.push_back(build_kummer_context({Field::prime(61), 6, 10, Field::Elem{2}, {}}));
  out.push_back(build_kummer_context({Field::make(FieldSpec::for_order(64)), 7, 9, {}, {}}));
  out.push_back(build_kummer_context({Field::prime(97), 48, 2, {}, {}}));
  out.push_back(build_lucas_context({Field::prime(7), 4, Field::Elem{3}, KPoint{5, 1}, 0}));
  out.push_back(build_lucas_context({Field::make(FieldSpec::for_order(25)), 13, {}, {}, 0}));
  out.push_back(build_lucas_context({Field::prime(71), 36, {}, {}, 0}));
  return out;
}

const std::vector<NormalBasisContext>& contexts() {
  static const auto all = sample_contexts();
  return all;
}

}  // namespace

TEST_CASE("engine matches the oracle on every path") {
  std::mt19937_64 rng(100);
  for (const auto& ctx : contexts()) {
    CAPTURE(kind_name(ctx.kind));
    CAPTURE(ctx.n);
    std::vector<Engine> engines;
    for (auto p : {ConvPath::Naive, ConvPath::Karatsuba, ConvPath::Auto}) engines.emplace_back(ctx, p);
    if (NttPlan::available(ctx.k(), ctx.n)) engines.emplace_back(ctx, ConvPath::Ntt);
    for (int t = 0; t < 20; ++t) {
      auto x = random_element(ctx, rng), y = random_element(ctx, rng);
      auto ref = oracle_multiply(ctx, x, y);
      for (const auto& e : engines) CHECK(e.multiply(x, y) == ref);
    }
  }
}

TEST_CASE("multiplication invariants") {
  std::mt19937_64 rng(101);
  for (const auto& ctx : contexts()) {
    const Field& k = ctx.k();
    CAPTURE(kind_name(ctx.kind));
    CAPTURE(ctx.n);
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(ctx, rng), y = random_element(ctx, rng), z = random_element(ctx, rng);
      auto xy = nb_multiply(ctx, x, y);
      CHECK(xy == nb_multiply(ctx, y, x));
      CHECK(nb_multiply(ctx, xy, z) == nb_multiply(ctx, x, nb_multiply(ctx, y, z)));
      CHECK(nb_multiply(ctx, x, nb_add(ctx, y, z)) == nb_add(ctx, xy, nb_multiply(ctx, x, z)));
      CHECK(nb_multiply(ctx, ctx.one_coords, x) == x);
      CHECK(nb_multiply(ctx, x, CVec(ctx.n, 0)) == CVec(ctx.n, 0));
      // scalars of K pass through
      const auto c = nbasis::testing::random_elem(k, rng);
      CHECK(nb_multiply(ctx, vec_scale(k, c, x), y) == vec_scale(k, c, xy));
      // shifting both factors shifts the product (c_k from c_0)
      for (long s : {1L, 2L, static_cast<long>(ctx.n) - 1})
        CHECK(nb_multiply(ctx, shift(x, s), shift(y, s)) == shift(xy, s));
      // Frobenius commutes with multiplication and matches the oracle
      const long f = ctx.frobenius_shift;
      CHECK(nb_frobenius(ctx, xy, f) == nb_multiply(ctx, nb_frobenius(ctx, x, f), nb_frobenius(ctx, y, f)));
      CHECK(nb_frobenius(ctx, x, f) == oracle_frobenius(ctx, x, 1));
    }
  }
}

TEST_CASE("structure constant rows regenerate basis products") {
  for (const auto& ctx : contexts()) {
    auto sc = structure_constants(ctx);
    for (std::size_t i = 0; i < ctx.n; ++i) CHECK(nb_multiply(ctx, unit_vector(ctx.n, 0), unit_vector(ctx.n, i)) == sc.rows[i]);
    const int w = compute_weight(ctx);
    CHECK(w >= static_cast<int>(2 * ctx.n - 1));
  }
}

TEST_CASE("exactly five convolutions and two pointwise products") {
  std::mt19937_64 rng(102);
  for (const auto& ctx : contexts()) {
    MultiplyStats st;
    nb_multiply(ctx, random_element(ctx, rng), random_element(ctx, rng), &st);
    CHECK(st.convolutions == 5);
    CHECK(st.pointwise == 2);
    nb_multiply(ctx, random_element(ctx, rng), random_element(ctx, rng), &st);
    CHECK(st.convolutions == 10);
  }
}

TEST_CASE("corrupted context data is caught by the oracle") {
  std::mt19937_64 rng(103);
  auto ctx = contexts()[3];
  ctx.i_vec[2] = ctx.k().add(ctx.i_vec[2], 1);
  int mismatches = 0;
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(ctx, rng), y = random_element(ctx, rng);
    if (nb_multiply(ctx, x, y) != oracle_multiply(ctx, x, y)) ++mismatches;
  }
  CHECK(mismatches > 0);
  CHECK_FALSE(verify_normal(ctx, 20).ok());
}

TEST_CASE("element validation") {
  const auto& ctx = contexts()[3];
  CHECK_RAISES(nb_multiply(ctx, CVec(5, 0), CVec(6, 0)), ErrorCode::SpecMismatch);
  CHECK_RAISES(nb_multiply(ctx, CVec(6, 61), CVec(6, 0)), ErrorCode::SpecMismatch);
  CHECK_RAISES(nb_frobenius(ctx, CVec(3, 0), 1), ErrorCode::SpecMismatch);
}

TEST_CASE("verify report") {
  for (const auto& ctx : contexts()) {
    auto r = verify_normal(ctx, 25, 9);
    CHECK(r.invertible);
    CHECK(r.conjugates);
    CHECK(r.invariants);
    CHECK(r.lower_bound);
    CHECK(r.oracle_matches == 25);
    CHECK(render_report(r).find("25/25 oracle matches") != std::string::npos);
    if (ctx.kind != GroupKind::Lucas) CHECK(r.ok());
  }
}

TEST_CASE("context files round-trip byte-identically") {
  for (const auto& ctx : contexts()) {
    const std::string text = serialize_context(ctx);
    CHECK(text.rfind(kContextVersion, 0) == 0);
    auto back = parse_context(text);
    CHECK(serialize_context(back) == text);
    CHECK(same_derived_data(ctx, back));
    CHECK(same_derived_data(ctx, rederive_context(back)));
  }
  const std::string path = "roundtrip_test.ctx";
  save_context(contexts()[0], path);
  CHECK(serialize_context(load_context(path)) == serialize_context(contexts()[0]));
  std::remove(path.c_str());
  CHECK_RAISES(load_context("does/not/exist.ctx"), ErrorCode::ParseError);
}

TEST_CASE("malformed context files are rejected") {
  const std::string good = serialize_context(contexts()[3]);
  CHECK_RAISES(parse_context(""), ErrorCode::ParseError);
  CHECK_RAISES(parse_context("nbasis-context 2\n"), ErrorCode::ParseError);
  std::string bad = good;
  auto pos = bad.find("kind=kummer");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 11, "kind=banana");
  CHECK_THROWS_AS(parse_context(bad), Error);
  // a tampered vector no longer matches the rederivation
  std::string tampered = good;
  pos = tampered.find("\ni_vec=");
  REQUIRE(pos != std::string::npos);
  tampered[pos + 7] = tampered[pos + 7] == '1' ? '2' : '1';
  auto ctx = parse_context(tampered);
  CHECK_FALSE(same_derived_data(ctx, rederive_context(ctx)));
}

TEST_CASE("bench helpers") {
  CHECK(bench_prime(GroupKind::Multiplicative, 6) == 13);
  CHECK(bench_prime(GroupKind::Multiplicative, 12) == 73);
  CHECK(bench_prime(GroupKind::Multiplicative, 24) == 97);
  CHECK(bench_prime(GroupKind::Multiplicative, 48) == 97);
  auto ctx = bench_context(GroupKind::Multiplicative, 12);
  CHECK(ctx.n == 12);
  auto r = bench_multiply(ctx, ConvPath::Auto, 1, 0.001);
  CHECK(r.ns_per_multiply > 0);
  CHECK(r.per_call.convolutions == 5);
  CHECK(r.per_call.pointwise == 2);
  auto l = bench_context(GroupKind::Lucas, 6);
  CHECK((l.k().order() + 1) % 6 == 0);
}
