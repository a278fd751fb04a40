#include "nbasis/field.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "nbasis/error.hpp"
#include "nbasis/poly_algorithms.hpp"
#include "nbasis/text_format.hpp"

namespace nbasis {

namespace {

constexpr u64 kMaxPrime = 3037000499ULL;  // p^2 < 2^63
constexpr u64 kTableLimit = u64{1} << 20;
constexpr int kMaxDegree = 64;

}  // namespace

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "p=" << p;
  if (!g.empty()) {
    os << ";g=";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  }
  return os.str();
}

FieldSpec FieldSpec::parse(const std::string& text) {
  FieldSpec s;
  bool have_p = false;
  for (const auto& part : text::split(text, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) raise(ErrorCode::ParseError, "field spec item without '=': " + part);
    auto key = text::strip(part.substr(0, eq));
    auto val = text::strip(part.substr(eq + 1));
    if (key == "p") {
      s.p = text::parse_u64(val);
      have_p = true;
    } else if (key == "g") {
      s.g.clear();
      for (const auto& c : text::split(val, ',')) s.g.push_back(text::parse_u64(c));
    } else {
      raise(ErrorCode::ParseError, "unknown field spec key: " + key);
    }
  }
  if (!have_p) raise(ErrorCode::ParseError, "field spec lacks p: " + text);
  return s;
}

FieldSpec FieldSpec::for_order(u64 q) {
  auto pp = prime_power(q);
  if (!pp) raise(ErrorCode::InvalidParameter, "not a prime power: " + std::to_string(q));
  auto [p, d] = *pp;
  if (d == 1) return FieldSpec{p, {}};
  Field fp(FieldSpec{p, {}});
  const u64 count = checked_pow(p, d);
  for (u64 idx = 0; idx < count; ++idx) {
    // idx enumerates (c0, ..., c_{d-1}) with c0 most significant: lexicographic order.
    std::vector<u64> g(d + 1, 0);
    u64 rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      g[i] = rest % p;
      rest /= p;
    }
    g[d] = 1;
    if (g[0] == 0) continue;
    if (poly_is_irreducible(fp, g)) return FieldSpec{p, g};
  }
  raise(ErrorCode::ExhaustedSearch, "no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), p_(spec_.p), d_(spec_.degree()) {
  if (!is_prime(p_)) raise(ErrorCode::InvalidParameter, "characteristic is not prime: " + std::to_string(p_));
  if (p_ > kMaxPrime) raise(ErrorCode::InvalidParameter, "characteristic too large (need p^2 < 2^63)");
  if (d_ > kMaxDegree) raise(ErrorCode::InvalidParameter, "extension degree too large");
  q_ = checked_pow(p_, d_);
  if (q_ > (u64{1} << 62)) raise(ErrorCode::InvalidParameter, "field cardinality too large");
  pw_.resize(d_ + 1);
  pw_[0] = 1;
  for (int i = 1; i <= d_; ++i) pw_[i] = pw_[i - 1] * p_;
  if (!spec_.g.empty()) {
    if (spec_.g.size() < 2) raise(ErrorCode::InvalidParameter, "defining polynomial must have degree >= 1");
    for (u64 c : spec_.g)
      if (c >= p_) raise(ErrorCode::InvalidParameter, "defining polynomial coefficient out of range");
    if (spec_.g.back() != 1) raise(ErrorCode::InvalidParameter, "defining polynomial must be monic");
    Field fp(FieldSpec{p_, {}});
    if (!poly_is_irreducible(fp, spec_.g))
      raise(ErrorCode::InvalidParameter, "defining polynomial is reducible: " + spec_.to_string());
  }
  generator_ = find_generator();
  if (d_ > 1 && q_ <= kTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (u64 i = 0; i + 1 < q_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, generator_);
    }
  }
}

std::shared_ptr<const Field> Field::make(const FieldSpec& spec) { return std::make_shared<const Field>(spec); }

Field::Elem Field::from_int(i64 v) const {
  i64 r = v % static_cast<i64>(p_);
  if (r < 0) r += static_cast<i64>(p_);
  return static_cast<Elem>(r);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (d_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0;
  for (int i = 0; i < d_; ++i) {
    u64 s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Field::Elem Field::neg(Elem a) const {
  if (d_ == 1) return a ? p_ - a : 0;
  Elem r = 0;
  for (int i = 0; i < d_; ++i) {
    u64 c = a % p_;
    r += (c ? p_ - c : 0) * pw_[i];
    a /= p_;
  }
  return r;
}

Field::Elem Field::sub(Elem a, Elem b) const {
  if (d_ == 1) return a >= b ? a - b : a + p_ - b;
  return add(a, neg(b));
}

Field::Elem Field::mul_slow(Elem a, Elem b) const {
  if (d_ == 1) return mulmod(a, b, p_);
  std::array<u64, kMaxDegree> ca{}, cb{};
  std::array<u64, 2 * kMaxDegree> prod{};
  for (int i = 0; i < d_; ++i) {
    ca[i] = a % p_;
    cb[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (int i = 0; i < d_; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
  }
  const auto& g = spec_.g;
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    u64 c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int j = 0; j < d_; ++j) {
      u64 t = mulmod(c, g[j], p_);
      prod[k - d_ + j] = (prod[k - d_ + j] + p_ - t) % p_;
    }
  }
  Elem r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

Field::Elem Field::mul(Elem a, Elem b) const {
  if (d_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    u64 s = static_cast<u64>(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_slow(a, b);
}

Field::Elem Field::pow(Elem a, u128 e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (d_ == 1) return invmod(a, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

bool Field::less(Elem a, Elem b) const {
  for (int i = 0; i < d_; ++i) {
    u64 ca = a % p_, cb = b % p_;
    if (ca != cb) return ca < cb;
    a /= p_;
    b /= p_;
  }
  return false;
}

u64 Field::trace(Elem a) const {
  Elem s = 0, x = a;
  for (int i = 0; i < d_; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

Field::Elem Field::find_generator() const {
  const u64 n = q_ - 1;
  if (n == 1) return 1;
  const auto primes = prime_divisors(n);
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (u64 l : primes) {
      // pow via mul_slow so this works before tables exist
      Elem r = 1, b = g;
      u64 e = n / l;
      while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  raise(ErrorCode::ExhaustedSearch, "no primitive element found");
}

std::vector<u64> Field::coeffs(Elem a) const {
  std::vector<u64> c(d_);
  for (int i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Elem Field::from_coeffs(const std::vector<u64>& c) const {
  if (static_cast<int>(c.size()) > d_)
    raise(ErrorCode::SpecMismatch, "element has more coefficients than the field degree");
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
  return r;
}

std::string Field::format(Elem a) const {
  std::string out;
  auto c = coeffs(a);
  for (int i = 0; i < d_; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Field::Elem Field::parse(const std::string& text) const {
  std::vector<u64> c;
  for (const auto& part : text::split(text, ',')) {
    i64 v = text::parse_i64(part);
    c.push_back(from_int(v));
  }
  if (c.empty()) raise(ErrorCode::ParseError, "empty field element");
  return from_coeffs(c);
}

FieldElement::FieldElement(FieldPtr field, Field::Elem v) : field_(std::move(field)), v_(v) {
  if (!field_->is_valid(v_)) raise(ErrorCode::SpecMismatch, "element out of range for field");
}

FieldElement FieldElement::parse(FieldPtr field, const std::string& text) {
  auto v = field->parse(text);
  return FieldElement(std::move(field), v);
}

void FieldElement::check(const FieldElement& o) const {
  if (field_ != o.field_ && !(field_->spec() == o.field_->spec()))
    raise(ErrorCode::SpecMismatch, field_->spec().to_string() + " vs " + o.field_->spec().to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, field_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {field_, field_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {field_, field_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {field_, field_->div(v_, o.v_)};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(v_)}; }
FieldElement FieldElement::pow(u128 e) const { return {field_, field_->pow(v_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return v_ == o.v_;
}

}  // namespace nbasis
