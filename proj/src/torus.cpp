#include "nbasis/torus.hpp"

#include "nbasis/text_format.hpp"

namespace nbasis {

std::pair<BiPoly, BiPoly> isogeny_polynomials(const Field& k, u64 n, Field::Elem alpha) {
  const auto binom = pascal_row_mod(n, k.characteristic());
  BiPoly nx, ny;
  Field::Elem ak = k.one();
  for (u64 j = 0; j <= n; ++j) {
    const Field::Elem c = k.mul(k.from_int(static_cast<i64>(binom[j])), ak);
    if (j % 2 == 0) {
      nx.add_term(k, n - j, j, c);
    } else {
      ny.add_term(k, n - j, j, c);
      ak = k.mul(ak, alpha);
    }
  }
  return {nx, ny};
}

std::string format_point(const Field& k, const TorusPoint<Field::Elem>& P) { return k.format(P.x) + "|" + k.format(P.y); }

TorusPoint<Field::Elem> parse_point(const Field& k, const std::string& text) {
  auto parts = text::split(text, '|');
  if (parts.size() != 2) raise(ErrorCode::ParseError, "torus point must look like 'x|y': " + text);
  return {k.parse(parts[0]), k.parse(parts[1])};
}

}  // namespace nbasis
