#include "nbasis/context_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "nbasis/error.hpp"
#include "nbasis/text_format.hpp"

namespace nbasis {

std::string serialize_context(const NormalBasisContext& ctx) {
  const Field& k = ctx.k();
  std::ostringstream os;
  os << kContextVersion << "\n";
  os << "kind=" << kind_name(ctx.kind) << "\n";
  os << "field=" << k.spec().to_string() << "\n";
  os << "n=" << ctx.n << "\n";
  os << "seed=" << ctx.params.seed << "\n";
  const auto& p = ctx.params;
  if (p.a) os << "a=" << k.format(*p.a) << "\n";
  if (p.r) os << "r=" << k.format(*p.r) << "\n";
  if (p.m) os << "m=" << *p.m << "\n";
  if (p.zeta_mn) os << "zeta_mn=" << k.format(*p.zeta_mn) << "\n";
  if (p.alpha) os << "alpha=" << k.format(*p.alpha) << "\n";
  if (p.generator) os << "generator=" << format_point(k, *p.generator) << "\n";
  os << "i_vec=" << text::format_vector(k, ctx.i_vec) << "\n";
  os << "u_vec=" << text::format_vector(k, ctx.u_vec) << "\n";
  os << "u_inv_vec=" << text::format_vector(k, ctx.u_inv_vec) << "\n";
  os << "w_vec=" << text::format_vector(k, ctx.w_vec) << "\n";
  os << "scale=" << k.format(ctx.scale) << "\n";
  os << "differenced=" << (ctx.differenced ? 1 : 0) << "\n";
  os << "frobenius_shift=" << ctx.frobenius_shift << "\n";
  if (ctx.lucas) {
    os << "lucas.t=" << format_point(k, ctx.lucas->t) << "\n";
    os << "lucas.y_b=" << text::format_vector(k, ctx.lucas->y_b) << "\n";
    os << "lucas.c=" << k.format(ctx.lucas->c_frak) << "\n";
    os << "lucas.a=" << k.format(ctx.lucas->a_frak) << "\n";
    os << "lucas.b=" << k.format(ctx.lucas->b_frak) << "\n";
  }
  os << "l_poly=" << text::format_vector(k, ctx.l_poly) << "\n";
  for (std::size_t i = 0; i < ctx.n; ++i) os << "theta." << i << "=" << text::format_vector(k, ctx.theta[i]) << "\n";
  os << "one=" << text::format_vector(k, ctx.one_coords) << "\n";
  return os.str();
}

namespace {

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) raise(ErrorCode::ParseError, "context file lacks '" + key + "'");
  return it->second;
}

CVec need_vector(const Field& k, const std::map<std::string, std::string>& kv, const std::string& key, std::size_t n) {
  CVec v = text::parse_vector(k, need(kv, key));
  if (v.size() != n) raise(ErrorCode::ParseError, "'" + key + "' has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

}  // namespace

NormalBasisContext parse_context(const std::string& body) {
  std::istringstream is(body);
  std::string line;
  if (!std::getline(is, line) || text::strip(line) != kContextVersion)
    raise(ErrorCode::ParseError, "missing or unsupported version tag");
  std::map<std::string, std::string> kv;
  while (std::getline(is, line)) {
    if (text::strip(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) raise(ErrorCode::ParseError, "line without '=': " + line);
    auto key = line.substr(0, eq);
    if (!kv.emplace(key, line.substr(eq + 1)).second) raise(ErrorCode::ParseError, "duplicate key '" + key + "'");
  }

  NormalBasisContext ctx;
  ctx.kind = parse_kind(need(kv, "kind"));
  ctx.base = Field::make(FieldSpec::parse(need(kv, "field")));
  const Field& k = *ctx.base;
  ctx.n = text::parse_u64(need(kv, "n"));
  if (ctx.n < 2) raise(ErrorCode::ParseError, "n must be at least 2");
  ctx.params.seed = text::parse_u64(need(kv, "seed"));
  if (kv.count("a")) ctx.params.a = k.parse(kv["a"]);
  if (kv.count("r")) ctx.params.r = k.parse(kv["r"]);
  if (kv.count("m")) ctx.params.m = text::parse_u64(kv["m"]);
  if (kv.count("zeta_mn")) ctx.params.zeta_mn = k.parse(kv["zeta_mn"]);
  if (kv.count("alpha")) ctx.params.alpha = k.parse(kv["alpha"]);
  if (kv.count("generator")) ctx.params.generator = parse_point(k, kv["generator"]);

  ctx.i_vec = need_vector(k, kv, "i_vec", ctx.n);
  ctx.u_vec = need_vector(k, kv, "u_vec", ctx.n);
  ctx.u_inv_vec = need_vector(k, kv, "u_inv_vec", ctx.n);
  ctx.w_vec = need_vector(k, kv, "w_vec", ctx.n);
  ctx.scale = k.parse(need(kv, "scale"));
  const auto diff = need(kv, "differenced");
  if (diff != "0" && diff != "1") raise(ErrorCode::ParseError, "differenced must be 0 or 1");
  ctx.differenced = diff == "1";
  if (kv.count("lucas.t")) {
    LucasData ld;
    ld.t = parse_point(k, kv["lucas.t"]);
    ld.y_b = need_vector(k, kv, "lucas.y_b", ctx.n);
    ld.c_frak = k.parse(need(kv, "lucas.c"));
    ld.a_frak = k.parse(need(kv, "lucas.a"));
    ld.b_frak = k.parse(need(kv, "lucas.b"));
    ctx.lucas = ld;
  }
  ctx.l_poly = need_vector(k, kv, "l_poly", ctx.n + 1);
  for (std::size_t i = 0; i < ctx.n; ++i) ctx.theta.push_back(need_vector(k, kv, "theta." + std::to_string(i), ctx.n));
  const CVec one = need_vector(k, kv, "one", ctx.n);
  const long shift = static_cast<long>(text::parse_i64(need(kv, "frobenius_shift")));

  try {
    finalize_context(ctx);
  } catch (const Error& e) {
    raise(ErrorCode::ParseError, std::string("context oracle data is invalid: ") + e.what());
  }
  if (one != ctx.one_coords) raise(ErrorCode::ParseError, "stored coordinates of 1 disagree with the theta matrix");
  if (shift != ctx.frobenius_shift) raise(ErrorCode::ParseError, "stored Frobenius shift disagrees with the theta matrix");
  return ctx;
}

void save_context(const NormalBasisContext& ctx, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) raise(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  os << serialize_context(ctx);
  if (!os) raise(ErrorCode::ParseError, "write to '" + path + "' failed");
}

NormalBasisContext load_context(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_context(ss.str());
}

}  // namespace nbasis
