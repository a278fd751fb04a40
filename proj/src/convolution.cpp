#include "nbasis/convolution.hpp"

#include "nbasis/error.hpp"
#include "nbasis/polynomial.hpp"

namespace nbasis {

namespace {

void check_lengths(const CVec& u, const CVec& v) {
  if (u.size() != v.size())
    raise(ErrorCode::LengthMismatch, "vector lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  if (u.empty()) raise(ErrorCode::LengthMismatch, "empty cyclic vector");
}

std::size_t smallest_prime_factor(std::size_t n) {
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace

ConvPath parse_conv_path(const std::string& s) {
  if (s == "auto") return ConvPath::Auto;
  if (s == "naive") return ConvPath::Naive;
  if (s == "karatsuba") return ConvPath::Karatsuba;
  if (s == "ntt") return ConvPath::Ntt;
  raise(ErrorCode::ParseError, "unknown convolution path '" + s + "'");
}

const char* conv_path_name(ConvPath p) {
  switch (p) {
    case ConvPath::Auto: return "auto";
    case ConvPath::Naive: return "naive";
    case ConvPath::Karatsuba: return "karatsuba";
    case ConvPath::Ntt: return "ntt";
  }
  return "?";
}

CVec convolve_naive(const Field& k, const CVec& u, const CVec& v) {
  check_lengths(u, v);
  const std::size_t n = u.size();
  CVec out(n, k.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (k.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t idx = i + j;
      if (idx >= n) idx -= n;
      out[idx] = k.add(out[idx], k.mul(u[i], v[j]));
    }
  }
  return out;
}

CVec convolve_karatsuba(const Field& k, const CVec& u, const CVec& v) {
  check_lengths(u, v);
  const std::size_t n = u.size();
  CVec prod(2 * n - 1, k.zero());
  poly::detail::karatsuba(k, u.data(), v.data(), n, prod.data());
  CVec out(prod.begin(), prod.begin() + n);
  for (std::size_t i = n; i < prod.size(); ++i) out[i - n] = k.add(out[i - n], prod[i]);
  return out;
}

bool NttPlan::available(const Field& k, std::size_t n) { return n >= 1 && (k.order() - 1) % n == 0; }

NttPlan::NttPlan(const Field& k, std::size_t n) : n_(n) {
  if (!available(k, n)) raise(ErrorCode::BadRootOfUnity, "no root of unity of order " + std::to_string(n) + " in K");
  omega_ = k.pow(k.primitive_element(), (k.order() - 1) / n);
  // exact order n: omega^{n/l} != 1 for each prime l | n
  for (u64 l : prime_divisors(n))
    if (k.eq(k.pow(omega_, n / l), k.one())) raise(ErrorCode::BadRootOfUnity, "root of unity has smaller order");
  if (!k.eq(k.pow(omega_, n), k.one())) raise(ErrorCode::BadRootOfUnity, "root of unity has wrong order");
  pw_.resize(n);
  pw_inv_.resize(n);
  const auto omega_inv = k.inv(omega_);
  Field::Elem a = k.one(), b = k.one();
  for (std::size_t i = 0; i < n; ++i) {
    pw_[i] = a;
    pw_inv_[i] = b;
    a = k.mul(a, omega_);
    b = k.mul(b, omega_inv);
  }
  n_inv_ = k.inv(k.from_int(static_cast<i64>(n)));
}

void NttPlan::dft(const Field& k, const Field::Elem* in, std::size_t stride, std::size_t len,
                  const std::vector<Field::Elem>& pw, Field::Elem* out) const {
  if (len == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t r = smallest_prime_factor(len);
  const std::size_t m = len / r;
  const std::size_t step = n_ / len;  // omega_len = omega^step
  std::vector<Field::Elem> tmp(len);
  for (std::size_t s = 0; s < r; ++s) dft(k, in + s * stride, stride * r, m, pw, tmp.data() + s * m);
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t kk = 0; kk < m; ++kk) {
      const std::size_t idx = kk + m * t;
      Field::Elem acc = tmp[kk];
      for (std::size_t s = 1; s < r; ++s) {
        const std::size_t e = (s * idx * step) % n_;
        acc = k.add(acc, k.mul(pw[e], tmp[s * m + kk]));
      }
      out[idx] = acc;
    }
  }
}

CVec NttPlan::forward(const Field& k, const CVec& a) const {
  CVec out(n_);
  dft(k, a.data(), 1, n_, pw_, out.data());
  return out;
}

CVec NttPlan::inverse(const Field& k, const CVec& a) const {
  CVec out(n_);
  dft(k, a.data(), 1, n_, pw_inv_, out.data());
  for (auto& x : out) x = k.mul(x, n_inv_);
  return out;
}

CVec NttPlan::convolve(const Field& k, const CVec& u, const CVec& v) const {
  check_lengths(u, v);
  if (u.size() != n_) raise(ErrorCode::LengthMismatch, "vector length differs from transform length");
  CVec fu = forward(k, u), fv = forward(k, v);
  for (std::size_t i = 0; i < n_; ++i) fu[i] = k.mul(fu[i], fv[i]);
  return inverse(k, fu);
}

Convolver::Convolver(FieldPtr k, std::size_t n, ConvPath path) : k_(std::move(k)), n_(n), path_(path) {
  if (n_ == 0) raise(ErrorCode::LengthMismatch, "convolution length must be positive");
  if (path_ == ConvPath::Auto) {
    if (n_ < kAutoNaiveBelow)
      path_ = ConvPath::Naive;
    else
      path_ = NttPlan::available(*k_, n_) ? ConvPath::Ntt : ConvPath::Karatsuba;
  }
  if (path_ == ConvPath::Ntt) ntt_ = std::make_shared<const NttPlan>(*k_, n_);
}

CVec Convolver::convolve(const CVec& u, const CVec& v) const {
  check_lengths(u, v);
  if (u.size() != n_) raise(ErrorCode::LengthMismatch, "vector length differs from convolver length");
  switch (path_) {
    case ConvPath::Ntt: return ntt_->convolve(*k_, u, v);
    case ConvPath::Karatsuba: return convolve_karatsuba(*k_, u, v);
    default: return convolve_naive(*k_, u, v);
  }
}

CVec convolve(const Field& k, const CVec& u, const CVec& v, ConvPath path) {
  check_lengths(u, v);
  if (path == ConvPath::Auto) {
    if (u.size() < kAutoNaiveBelow) return convolve_naive(k, u, v);
    path = NttPlan::available(k, u.size()) ? ConvPath::Ntt : ConvPath::Karatsuba;
  }
  switch (path) {
    case ConvPath::Ntt: return NttPlan(k, u.size()).convolve(k, u, v);
    case ConvPath::Karatsuba: return convolve_karatsuba(k, u, v);
    default: return convolve_naive(k, u, v);
  }
}

CVec convolve_inverse(const Field& k, const CVec& u) {
  if (u.empty()) raise(ErrorCode::LengthMismatch, "empty cyclic vector");
  const std::size_t n = u.size();
  poly::Poly<Field> m(n + 1, k.zero());
  m[0] = k.neg(k.one());
  m[n] = k.add(m[n], k.one());
  poly::trim(k, m);
  poly::Poly<Field> a(u);
  poly::trim(k, a);
  auto [g, s, t] = poly::xgcd(k, a, m);
  if (g.size() != 1) raise(ErrorCode::NotInvertible, "vector polynomial shares a factor with X^n - 1");
  CVec out = poly::mod(k, s, m);
  out.resize(n, k.zero());
  return out;
}

CVec pointwise(const Field& k, const CVec& u, const CVec& v) {
  check_lengths(u, v);
  CVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = k.mul(u[i], v[i]);
  return out;
}

CVec shift(const CVec& u, long s) {
  const long n = static_cast<long>(u.size());
  if (n == 0) return u;
  CVec out(u.size());
  const long r = ((s % n) + n) % n;
  for (long i = 0; i < n; ++i) out[(i + r) % n] = u[i];
  return out;
}

CVec vec_add(const Field& k, const CVec& u, const CVec& v) {
  check_lengths(u, v);
  CVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = k.add(u[i], v[i]);
  return out;
}

CVec vec_sub(const Field& k, const CVec& u, const CVec& v) {
  check_lengths(u, v);
  CVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = k.sub(u[i], v[i]);
  return out;
}

CVec vec_scale(const Field& k, Field::Elem c, const CVec& u) {
  CVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = k.mul(c, u[i]);
  return out;
}

CVec unit_vector(std::size_t n, std::size_t i) {
  CVec out(n, 0);
  out[i % n] = 1;
  return out;
}

}  // namespace nbasis
