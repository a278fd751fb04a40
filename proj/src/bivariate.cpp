#include "nbasis/bivariate.hpp"

#include <algorithm>

#include "nbasis/error.hpp"

namespace nbasis {

using OuterPoly = std::vector<KPoly>;

Field::Elem BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return 0;
  return c_[i][j];
}

void BiPoly::set(std::size_t i, std::size_t j, Field::Elem c) {
  if (i >= c_.size()) c_.resize(i + 1);
  if (j >= c_[i].size()) c_[i].resize(j + 1, 0);
  c_[i][j] = c;
}

void BiPoly::add_term(const Field& k, std::size_t i, std::size_t j, Field::Elem c) { set(i, j, k.add(coeff(i, j), c)); }

int BiPoly::degree_x() const {
  for (std::size_t i = c_.size(); i-- > 0;)
    for (auto v : c_[i])
      if (v) return static_cast<int>(i);
  return -1;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& row : c_)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) d = std::max(d, static_cast<int>(j));
  return d;
}

std::vector<KPoly> BiPoly::as_poly_in_y(const Field& k) const {
  std::vector<KPoly> out(std::max(degree_y() + 1, 0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (!c_[i][j]) continue;
      if (out[j].size() <= i) out[j].resize(i + 1, 0);
      out[j][i] = c_[i][j];
    }
  for (auto& p : out) poly::trim(k, p);
  return out;
}

std::vector<KPoly> BiPoly::as_poly_in_x(const Field& k) const {
  std::vector<KPoly> out(std::max(degree_x() + 1, 0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = c_[i];
    poly::trim(k, out[i]);
  }
  return out;
}

Field::Elem BiPoly::eval(const Field& k, Field::Elem x, Field::Elem y) const {
  Field::Elem r = 0, xp = 1;
  for (const auto& row : c_) {
    Field::Elem s = 0, yp = 1;
    for (auto v : row) {
      s = k.add(s, k.mul(v, yp));
      yp = k.mul(yp, y);
    }
    r = k.add(r, k.mul(s, xp));
    xp = k.mul(xp, x);
  }
  return r;
}

namespace {

void trim_outer(OuterPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

KPoly kpoly_pow(const Field& k, const KPoly& a, int e) {
  KPoly r = poly::constant(k, k.one());
  for (int i = 0; i < e; ++i) r = poly::mul(k, r, a);
  return r;
}

KPoly exact_div(const Field& k, const KPoly& a, const KPoly& b) {
  auto [q, r] = poly::divmod(k, a, b);
  if (!r.empty()) raise(ErrorCode::DegenerateInput, "inexact division in fraction-free elimination");
  return q;
}

bool is_unit(const KPoly& c) { return c.size() == 1; }

// a mod b in K[x][y] where lc(b) is a nonzero constant.
OuterPoly outer_mod(const Field& k, OuterPoly a, const OuterPoly& b) {
  const std::size_t db = b.size() - 1;
  const auto lc_inv = k.inv(b.back()[0]);
  while (a.size() > db) {
    trim_outer(a);
    if (a.size() <= db) break;
    const std::size_t shift = a.size() - 1 - db;
    const KPoly c = poly::scale(k, lc_inv, a.back());
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = poly::sub(k, a[shift + j], poly::mul(k, c, b[j]));
    a.pop_back();
  }
  trim_outer(a);
  return a;
}

}  // namespace

KPoly resultant_sylvester(const Field& k, const OuterPoly& a_in, const OuterPoly& b_in) {
  OuterPoly a = a_in, b = b_in;
  trim_outer(a);
  trim_outer(b);
  if (a.empty() || b.empty()) return {};
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m == 0) return kpoly_pow(k, a[0], n);
  if (n == 0) return kpoly_pow(k, b[0], m);
  const int N = m + n;
  std::vector<std::vector<KPoly>> M(N, std::vector<KPoly>(N));
  // Rows 0..n-1 shift a, rows n..N-1 shift b; column j holds the coefficient of y^{N-1-j}.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + m - i] = a[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = b[i];
  bool negate = false;
  KPoly prev = poly::constant(k, k.one());
  for (int c = 0; c + 1 < N; ++c) {
    if (M[c][c].empty()) {
      int piv = c + 1;
      while (piv < N && M[piv][c].empty()) ++piv;
      if (piv == N) return {};
      std::swap(M[piv], M[c]);
      negate = !negate;
    }
    for (int i = c + 1; i < N; ++i) {
      for (int j = c + 1; j < N; ++j) {
        KPoly t = poly::sub(k, poly::mul(k, M[i][j], M[c][c]), poly::mul(k, M[i][c], M[c][j]));
        M[i][j] = exact_div(k, t, prev);
      }
      M[i][c].clear();
    }
    prev = M[c][c];
  }
  KPoly det = M[N - 1][N - 1];
  return negate ? poly::neg(k, det) : det;
}

KPoly resultant_euclid(const Field& k, const OuterPoly& a_in, const OuterPoly& b_in) {
  OuterPoly a = a_in, b = b_in;
  trim_outer(a);
  trim_outer(b);
  if (a.empty() || b.empty()) return {};
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (n == 0) return kpoly_pow(k, b[0], m);
  if (m == 0) return kpoly_pow(k, a[0], n);
  const bool odd = (m % 2 == 1) && (n % 2 == 1);
  if (m < n) {
    KPoly r = resultant_euclid(k, b, a);
    return odd ? poly::neg(k, r) : r;
  }
  if (!is_unit(b.back())) return resultant_sylvester(k, a, b);
  // Res(a,b) = (-1)^{mn} Res(b,a) = (-1)^{mn} lc(b)^{m-l} Res(b, a mod b)
  OuterPoly r = outer_mod(k, a, b);
  if (r.empty()) return {};
  const int l = static_cast<int>(r.size()) - 1;
  KPoly res = resultant_euclid(k, b, r);
  res = poly::scale(k, k.pow(b.back()[0], static_cast<u64>(m - l)), res);
  return odd ? poly::neg(k, res) : res;
}

KPoly resultant_eliminate(const Field& k, const BiPoly& f, const BiPoly& g, Var var) {
  const int df = var == Var::Y ? f.degree_y() : f.degree_x();
  const int dg = var == Var::Y ? g.degree_y() : g.degree_x();
  if (df < 1 || dg < 1) raise(ErrorCode::DegenerateInput, "resultant needs positive degree in the eliminated variable");
  auto a = var == Var::Y ? f.as_poly_in_y(k) : f.as_poly_in_x(k);
  auto b = var == Var::Y ? g.as_poly_in_y(k) : g.as_poly_in_x(k);
  return resultant_euclid(k, a, b);
}

}  // namespace nbasis
