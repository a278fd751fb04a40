// Command-line driver: construct, mul, verify, weight, bench.
#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "nbasis/additive.hpp"
#include "nbasis/bench.hpp"
#include "nbasis/context_file.hpp"
#include "nbasis/engine.hpp"
#include "nbasis/error.hpp"
#include "nbasis/kummer.hpp"
#include "nbasis/lucas.hpp"
#include "nbasis/oracle.hpp"
#include "nbasis/text_format.hpp"

using namespace nbasis;

namespace {

struct ConstructOpts {
  std::string kind;
  std::string field;
  u64 p = 0, q = 0, n = 0, m = 0, degree = 2;
  std::string ext, a, r, zeta, alpha, gen, out;
};

FieldPtr construct_field(const ConstructOpts& o) {
  if (!o.field.empty()) return Field::make(FieldSpec::parse(o.field));
  if (o.kind == "additive") {
    if (!o.p) raise(ErrorCode::InvalidParameter, "additive needs --p (or --field)");
    if (!o.ext.empty()) {
      FieldSpec s{o.p, text::parse_u64_list(o.ext)};
      return Field::make(s);
    }
    return Field::make(FieldSpec::for_order(checked_pow(o.p, static_cast<int>(o.degree))));
  }
  if (!o.q) raise(ErrorCode::InvalidParameter, o.kind + " needs --q (or --field)");
  return Field::make(FieldSpec::for_order(o.q));
}

void print_summary(const NormalBasisContext& ctx) {
  const Field& k = ctx.k();
  std::cout << "kind: " << kind_name(ctx.kind) << "\n";
  std::cout << "field: " << k.spec().to_string() << "\n";
  std::cout << "n: " << ctx.n << "\n";
  if (ctx.lucas) {
    std::cout << "generator: " << format_point(k, *ctx.params.generator) << "\n";
    std::cout << "t: " << format_point(k, ctx.lucas->t) << "\n";
    std::cout << "y_b: " << text::format_vector(k, ctx.lucas->y_b) << "\n";
  }
  std::cout << "l_poly: " << text::format_vector(k, ctx.l_poly) << "\n";
  for (std::size_t i = 0; i < ctx.n; ++i) std::cout << "theta_" << i << ": " << text::format_vector(k, ctx.theta[i]) << "\n";
  std::cout << "i_vec: " << text::format_vector(k, ctx.i_vec) << "\n";
  std::cout << "u_vec: " << text::format_vector(k, ctx.u_vec) << "\n";
  std::cout << "u_inv_vec: " << text::format_vector(k, ctx.u_inv_vec) << "\n";
  std::cout << "w_vec: " << text::format_vector(k, ctx.w_vec) << "\n";
  std::cout << "scale: " << k.format(ctx.scale) << "\n";
}

int cmd_construct(const ConstructOpts& o, u64 seed) {
  auto k = construct_field(o);
  NormalBasisContext ctx;
  if (o.kind == "additive") {
    AdditiveParams p{k, std::nullopt, std::nullopt};
    if (!o.a.empty()) p.a = k->parse(o.a);
    if (!o.r.empty()) p.r = k->parse(o.r);
    ctx = build_additive_context(p);
  } else if (o.kind == "kummer" || o.kind == "multiplicative") {
    if (!o.n) raise(ErrorCode::InvalidParameter, "kummer needs --n");
    KummerParams p{k, o.n, o.m ? o.m : (k->order() - 1) / o.n, std::nullopt, std::nullopt};
    if (!o.a.empty()) p.a = k->parse(o.a);
    if (!o.zeta.empty()) p.zeta_mn = k->parse(o.zeta);
    ctx = build_kummer_context(p);
  } else if (o.kind == "lucas") {
    if (!o.n) raise(ErrorCode::InvalidParameter, "lucas needs --n");
    LucasParams p{k, o.n, std::nullopt, std::nullopt, seed};
    if (!o.alpha.empty()) p.alpha = k->parse(o.alpha);
    if (!o.gen.empty()) p.generator = parse_point(*k, o.gen);
    ctx = build_lucas_context(p);
  } else {
    raise(ErrorCode::ParseError, "unknown kind '" + o.kind + "'");
  }
  const std::string out = o.out.empty() ? std::string(kind_name(ctx.kind)) + ".ctx" : o.out;
  save_context(ctx, out);
  print_summary(ctx);
  const auto report = verify_normal(ctx);
  std::cout << "weight: " << report.weight << "\n";
  std::cout << render_report(report);
  std::cout << "context written to " << out << "\n";
  return 0;
}

int cmd_mul(const std::string& path, const std::string& xs, const std::string& ys, ConvPath conv) {
  auto ctx = load_context(path);
  const CVec x = text::parse_coordinates(ctx.k(), xs);
  const CVec y = text::parse_coordinates(ctx.k(), ys);
  Engine engine(ctx, conv);
  std::cout << text::format_coordinates(ctx.k(), engine.multiply(x, y)) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, int trials, u64 seed, ConvPath conv) {
  auto ctx = load_context(path);
  auto report = verify_normal(ctx, 0, seed);
  // Oracle trials on the requested convolution path.
  Engine engine(ctx, conv);
  std::mt19937_64 rng(seed);
  report.trials = trials;
  report.oracle_matches = 0;
  for (int t = 0; t < trials; ++t) {
    CVec x = random_element(ctx, rng), y = random_element(ctx, rng);
    if (engine.multiply(x, y) == oracle_multiply(ctx, x, y)) ++report.oracle_matches;
  }
  const bool rederived = same_derived_data(ctx, rederive_context(ctx));
  std::cout << render_report(report);
  std::cout << "rederivation from parameters: " << (rederived ? "ok" : "FAIL") << "\n";
  return report.ok() && rederived ? 0 : 1;
}

int cmd_weight(const std::string& path) {
  auto ctx = load_context(path);
  std::cout << compute_weight(ctx) << "\n";
  return 0;
}

int cmd_bench(const std::string& kind, const std::string& sizes, u64 seed, ConvPath conv, double min_time) {
  const GroupKind gk = parse_kind(kind);
  std::cout << std::left << std::setw(6) << "n" << std::setw(8) << "q" << std::setw(11) << "path" << std::setw(16)
            << "ns/multiply" << std::setw(14) << "convolutions" << "pointwise\n";
  for (u64 n : text::parse_u64_list(sizes)) {
    auto ctx = bench_context(gk, n, seed);
    auto r = bench_multiply(ctx, conv, seed, min_time);
    std::cout << std::left << std::setw(6) << r.n << std::setw(8) << r.q << std::setw(11) << conv_path_name(r.path)
              << std::setw(16) << std::fixed << std::setprecision(0) << r.ns_per_multiply << std::setw(14)
              << r.per_call.convolutions << r.per_call.pointwise << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal bases of cyclic extensions with convolution-based multiplication"};
  app.require_subcommand(1);
  u64 seed = 0;
  std::string path_name = "auto";
  app.add_option("--seed", seed, "seed for all randomized steps")->capture_default_str();
  app.add_option("--path", path_name, "convolution path: auto|naive|karatsuba|ntt")->capture_default_str();

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a normal-basis context and write it to a file");
  construct->add_option("kind", co.kind, "additive | kummer | lucas")->required();
  construct->add_option("--field", co.field, "base field spec, e.g. 'p=5;g=2,3,0,1'");
  construct->add_option("--p", co.p, "characteristic (additive)");
  construct->add_option("--ext", co.ext, "defining polynomial of K, little-endian (additive)");
  construct->add_option("--degree", co.degree, "degree of K when --ext is absent (additive)")->capture_default_str();
  construct->add_option("--q", co.q, "base field order (kummer, lucas)");
  construct->add_option("--n", co.n, "extension degree (kummer, lucas)");
  construct->add_option("--m", co.m, "cofactor with mn | q-1 (kummer)");
  construct->add_option("--a", co.a, "isogeny target a (additive, kummer)");
  construct->add_option("--r", co.r, "evaluation point x(R) (additive)");
  construct->add_option("--zeta", co.zeta, "primitive mn-th root of unity (kummer)");
  construct->add_option("--alpha", co.alpha, "nonsquare alpha (lucas)");
  construct->add_option("--gen", co.gen, "torus generator 'x|y' (lucas)");
  construct->add_option("--out", co.out, "output context file");
  construct->add_option("--seed", seed, "seed for randomized steps");

  std::string ctx_path, xs, ys;
  auto* mul = app.add_subcommand("mul", "multiply two elements given by normal-basis coordinates");
  mul->add_option("ctx", ctx_path)->required();
  mul->add_option("--x", xs)->required();
  mul->add_option("--y", ys)->required();
  mul->add_option("--path", path_name);

  int trials = 100;
  auto* verify = app.add_subcommand("verify", "check a context against the polynomial-basis oracle");
  verify->add_option("ctx", ctx_path)->required();
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed);
  verify->add_option("--path", path_name);

  auto* weight = app.add_subcommand("weight", "print the weight of a context's basis");
  weight->add_option("ctx", ctx_path)->required();

  std::string bench_kind, sizes;
  double min_time = 0.05;
  auto* bench = app.add_subcommand("bench", "time nb_multiply over a family of degrees");
  bench->add_option("kind", bench_kind)->required();
  bench->add_option("sizes", sizes, "comma-separated degrees")->required();
  bench->add_option("seed_arg", seed, "seed (positional form)");
  bench->add_option("--seed", seed);
  bench->add_option("--path", path_name);
  bench->add_option("--min-time", min_time, "seconds per size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const ConvPath conv = parse_conv_path(path_name);
    if (*construct) return cmd_construct(co, seed);
    if (*mul) return cmd_mul(ctx_path, xs, ys, conv);
    if (*verify) return cmd_verify(ctx_path, trials, seed, conv);
    if (*weight) return cmd_weight(ctx_path);
    if (*bench) return cmd_bench(bench_kind, sizes, seed, conv, min_time);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
