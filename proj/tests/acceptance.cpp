// Acceptance runner: one PASS/FAIL line per criterion, with the sub-checks
// that decide it listed underneath.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "nbasis/additive.hpp"
#include "nbasis/bench.hpp"
#include "nbasis/engine.hpp"
#include "nbasis/kummer.hpp"
#include "nbasis/lucas.hpp"
#include "nbasis/oracle.hpp"
#include "nbasis/text_format.hpp"
#include "sweep.hpp"

using namespace nbasis;

namespace {

struct Criterion {
  std::vector<std::string> lines;
  bool pass = true;

  void item(bool ok, const std::string& what, const std::string& detail = "") {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + what + (detail.empty() ? "" : "  (" + detail + ")"));
  }
  template <class T>
  void expect(const std::string& what, const T& got, const T& want, const std::function<std::string(const T&)>& fmt) {
    const bool ok = got == want;
    item(ok, what, ok ? "" : "expected " + fmt(want) + ", got " + fmt(got));
  }
};

CVec random_vec(const Field& k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> d(0, k.order() - 1);
  CVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

std::string vec_str(const Field& k, const CVec& v) { return text::format_vector(k, v); }

void expect_vec(Criterion& c, const Field& k, const std::string& what, const CVec& got, const CVec& want) {
  c.expect<CVec>(what, got, want, [&](const CVec& v) { return vec_str(k, v); });
}

void expect_int(Criterion& c, const std::string& what, long got, long want) {
  c.expect<long>(what, got, want, [](const long& v) { return std::to_string(v); });
}

const std::vector<testing::SweepCase>& sweep() {
  static const auto cases = testing::sweep_cases();
  return cases;
}

// Builds every sweep context once; construction failures are reported per case.
struct Built {
  const testing::SweepCase* c;
  std::optional<NormalBasisContext> ctx;
  std::string error;
};

const std::vector<Built>& sweep_contexts() {
  static const std::vector<Built> all = [] {
    std::vector<Built> out;
    for (const auto& c : sweep()) {
      Built b{&c, std::nullopt, ""};
      try {
        b.ctx = testing::build_case(c);
      } catch (const Error& e) {
        b.error = e.what();
      }
      out.push_back(std::move(b));
    }
    return out;
  }();
  return all;
}

Criterion criterion1() {
  Criterion c;
  auto k = Field::make(FieldSpec::parse("p=5;g=2,3,0,1"));
  auto ctx = build_additive_context({k, Field::Elem{1}, k->epsilon()});
  expect_vec(c, *k, "i-bar", ctx.i_vec, {4, 4, 2, 3, 1});
  expect_vec(c, *k, "u_R (reference)", ctx.u_vec, text::parse_vector(*k, "1,0,2;1,4,4;3,3,4;1,4,3;2,2,3"));
  expect_vec(c, *k, "u_R^-1 (reference)", ctx.u_inv_vec, text::parse_vector(*k, "4,3,0;4,1,2;2,4,2;0,3,0;4,1,3"));
  expect_vec(c, *k, "w_R (reference)", ctx.w_vec, text::parse_vector(*k, "1,2,2;2,0,1;1,4,0;3,3,0;0,4,4"));
  expect_vec(c, *k, "product (1,3,1,1,2)x(2,1,1,4,2)", nb_multiply(ctx, {1, 3, 1, 1, 2}, {2, 1, 1, 4, 2}),
             {0, 3, 0, 0, 3});
  return c;
}

Criterion criterion2() {
  Criterion c;
  auto k = Field::prime(61);
  auto ctx = build_kummer_context({k, 6, 10, Field::Elem{2}, std::nullopt});
  expect_vec(c, *k, "i-bar", ctx.i_vec, {0, 53, 40, 23, 50, 18});
  expect_vec(c, *k, "u_a", ctx.u_vec, {1, 9, 21, 20, 22, 52});
  expect_vec(c, *k, "u_a^-1", ctx.u_inv_vec, {43, 11, 37, 55, 46, 32});
  expect_vec(c, *k, "w_a", ctx.w_vec, {1, 20, 14, 34, 57, 20});
  expect_vec(c, *k, "product (1,3,1,1,2,1)x(2,1,1,4,2,1)", nb_multiply(ctx, {1, 3, 1, 1, 2, 1}, {2, 1, 1, 4, 2, 1}),
             {6, 54, 5, 3, 45, 25});
  return c;
}

Criterion criterion3() {
  Criterion c;
  auto k = Field::prime(7);
  auto ctx = build_lucas_context({k, 4, Field::Elem{3}, KPoint{5, 1}, 0});
  const auto& L = ctx.L();
  c.expect<KPoint>("t", ctx.lucas->t, KPoint{0, 3}, [&](const KPoint& p) { return format_point(*k, p); });
  expect_vec(c, *k, "P_min", ctx.l_poly, poly_from_ints(*k, {3, 0, 1, 0, 1}));
  expect_vec(c, *k, "y(b)", ctx.lucas->y_b, L.parse("0;5;0;6"));
  const char* reference[4] = {"1;1;6;2", "2;1;1;1", "1;6;6;5", "2;6;1;6"};
  for (int i = 0; i < 4; ++i)
    expect_vec(c, *k, "theta_" + std::to_string(i), ctx.theta[i], text::parse_vector(*k, reference[i]));
  expect_vec(c, *k, "i-bar", ctx.i_vec, {3, 0, 0, 3});
  expect_vec(c, *k, "u_a", ctx.u_vec, {1, 4, 4, 0});
  expect_vec(c, *k, "u_a^-1", ctx.u_inv_vec, {0, 2, 6, 3});
  expect_vec(c, *k, "w_a", ctx.w_vec, {1, 2, 2, 0});
  expect_vec(c, *k, "product (1,3,1,1)x(2,1,1,4)", nb_multiply(ctx, {1, 3, 1, 1}, {2, 1, 1, 4}), {6, 0, 6, 3});
  return c;
}

Criterion criterion4() {
  Criterion c;
  {
    auto k = Field::make(FieldSpec::parse("p=5;g=2,3,0,1"));
    expect_int(c, "additive example weight", compute_weight(build_additive_context({k, Field::Elem{1}, k->epsilon()})),
               13);
  }
  expect_int(c, "kummer example weight",
             compute_weight(build_kummer_context({Field::prime(61), 6, 10, Field::Elem{2}, std::nullopt})), 15);
  for (auto kind : {GroupKind::Additive, GroupKind::Multiplicative, GroupKind::Lucas}) {
    int total = 0, below = 0, above = 0, failed = 0;
    std::string first;
    for (const auto& b : sweep_contexts()) {
      if (b.c->kind != kind) continue;
      ++total;
      if (!b.ctx) {
        ++failed;
        if (first.empty()) first = b.c->label + ": " + b.error;
        continue;
      }
      const long n = static_cast<long>(b.ctx->n), w = compute_weight(*b.ctx);
      if (w < 2 * n - 1) ++below;
      if (w > 3 * n - 2) {
        ++above;
        if (first.empty()) first = b.c->label + ": weight " + std::to_string(w) + " > " + std::to_string(3 * n - 2);
      }
    }
    std::ostringstream d;
    d << total << " contexts, " << below << " below 2n-1, " << above << " above 3n-2, " << failed << " not built";
    if (!first.empty()) d << "; first: " << first;
    c.item(total > 0 && below == 0 && above == 0 && failed == 0, std::string(kind_name(kind)) + " sweep bounds",
           d.str());
  }
  return c;
}

Criterion criterion5() {
  Criterion c;
  int contexts = 0, pairs = 0, mismatches = 0, failed = 0;
  std::string first;
  for (const auto& b : sweep_contexts()) {
    if (!b.ctx) {
      ++failed;
      continue;
    }
    ++contexts;
    std::mt19937_64 rng(5000 + contexts);
    for (int t = 0; t < 100; ++t) {
      auto x = random_element(*b.ctx, rng), y = random_element(*b.ctx, rng);
      ++pairs;
      if (nb_multiply(*b.ctx, x, y) != oracle_multiply(*b.ctx, x, y)) {
        ++mismatches;
        if (first.empty()) first = b.c->label;
      }
    }
  }
  std::ostringstream d;
  d << contexts << " contexts, " << pairs << " pairs, " << mismatches << " mismatches";
  if (!first.empty()) d << "; first in " << first;
  c.item(mismatches == 0 && contexts > 0, "engine equals oracle", d.str());
  c.item(failed == 0, "every sweep context builds", std::to_string(failed) + " failures");
  return c;
}

Criterion criterion6() {
  Criterion c;
  int contexts = 0, cases = 0, commute_bad = 0, oracle_bad = 0, no_shift = 0;
  for (const auto& b : sweep_contexts()) {
    if (!b.ctx) continue;
    const auto& ctx = *b.ctx;
    ++contexts;
    const long n = static_cast<long>(ctx.n), s = ctx.frobenius_shift;
    if (s < 0) {
      ++no_shift;
      continue;
    }
    // Shifting by 1 is x -> x^{|K|^e} with e s = 1 mod n.
    long e = 1;
    while ((e * s) % n != 1 % n) ++e;
    std::mt19937_64 rng(6000 + contexts);
    for (int t = 0; t < 50; ++t) {
      ++cases;
      auto x = random_element(ctx, rng), y = random_element(ctx, rng);
      if (nb_frobenius(ctx, nb_multiply(ctx, x, y), 1) !=
          nb_multiply(ctx, nb_frobenius(ctx, x, 1), nb_frobenius(ctx, y, 1)))
        ++commute_bad;
      if (nb_frobenius(ctx, x, 1) != oracle_frobenius(ctx, x, static_cast<u64>(e)) ||
          nb_frobenius(ctx, x, s) != oracle_frobenius(ctx, x, 1))
        ++oracle_bad;
    }
  }
  c.item(commute_bad == 0 && cases > 0, "shift by 1 commutes with multiplication",
         std::to_string(cases) + " cases, " + std::to_string(commute_bad) + " failures");
  c.item(oracle_bad == 0 && no_shift == 0 && cases > 0, "shift matches oracle exponentiation by |K|",
         std::to_string(oracle_bad) + " mismatches, " + std::to_string(no_shift) + " contexts without a shift");
  return c;
}

Criterion criterion7() {
  Criterion c;
  std::mt19937_64 rng(7000);
  std::uniform_int_distribution<std::size_t> len(2, 64);
  int pairs = 0, bad = 0, inverted = 0, inv_bad = 0, ntt_pairs = 0;
  const std::vector<FieldPtr> fields{Field::prime(5), Field::prime(7), Field::prime(61)};
  for (int t = 0; t < 1000; ++t) {
    const Field& k = *fields[t % 3];
    const std::size_t n = len(rng);
    auto u = random_vec(k, n, rng), v = random_vec(k, n, rng);
    const CVec ref = convolve_naive(k, u, v);
    ++pairs;
    bool ok = convolve_karatsuba(k, u, v) == ref && convolve(k, u, v, ConvPath::Auto) == ref;
    if (NttPlan::available(k, n)) {
      ++ntt_pairs;
      ok = ok && convolve(k, u, v, ConvPath::Ntt) == ref;
    }
    if (!ok) ++bad;
    try {
      auto ui = convolve_inverse(k, u);
      ++inverted;
      if (convolve(k, ui, u) != unit_vector(n)) ++inv_bad;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInvertible) ++inv_bad;
    }
  }
  c.item(bad == 0, "fast paths equal naive",
         std::to_string(pairs) + " pairs (" + std::to_string(ntt_pairs) + " via NTT), " + std::to_string(bad) +
             " mismatches");
  c.item(inv_bad == 0 && inverted > 0, "convolve_inverse(u) * u = identity",
         std::to_string(inverted) + " inverted, " + std::to_string(inv_bad) + " failures");
  return c;
}

Criterion criterion8() {
  Criterion c;
  int calls = 0, bad = 0;
  for (const auto& b : sweep_contexts()) {
    if (!b.ctx) continue;
    std::mt19937_64 rng(8000 + calls);
    MultiplyStats st;
    nb_multiply(*b.ctx, random_element(*b.ctx, rng), random_element(*b.ctx, rng), &st);
    ++calls;
    if (st.convolutions != 5 || st.pointwise != 2) ++bad;
  }
  c.item(bad == 0 && calls > 0, "5 convolutions and 2 pointwise products per multiply",
         std::to_string(calls) + " contexts, " + std::to_string(bad) + " deviations");

  // Best of several timing runs per size keeps scheduler noise out of the ratios.
  std::vector<double> ns;
  std::string table;
  for (u64 n : {6u, 12u, 24u, 48u}) {
    auto ctx = bench_context(GroupKind::Multiplicative, n, 0);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) best = std::min(best, bench_multiply(ctx, ConvPath::Ntt, rep, 0.04).ns_per_multiply);
    ns.push_back(best);
    table += (table.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " q=" + std::to_string(ctx.k().order()) + ": " +
                                            std::to_string(static_cast<long>(best)) + "ns");
  }
  c.item(true, "timings", table);
  for (std::size_t i = 1; i < ns.size(); ++i) {
    const double ratio = ns[i] / ns[i - 1];
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "ratio " << ratio;
    c.item(ratio <= 3.0, "growth per doubling to n=" + std::to_string(6u << i) + " <= 3", d.str());
  }
  return c;
}

const char* kTitles[8] = {
    "additive example values",     "kummer example values",  "lucas example values",
    "weights and bounds",          "oracle equivalence",     "frobenius shift law",
    "convolution engine",          "operation counts and scaling",
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8};
  const std::function<Criterion()> runners[8] = {criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
  bool all = true;
  for (int id : which) {
    if (id < 1 || id > 8) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    Criterion c;
    try {
      c = runners[id - 1]();
    } catch (const Error& e) {
      c.item(false, "unexpected error", e.what());
    }
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << kTitles[id - 1] << "\n";
    for (const auto& l : c.lines) std::cout << l << "\n";
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
