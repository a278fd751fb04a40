#include "nbasis/text_format.hpp"

#include <charconv>

#include "nbasis/error.hpp"

namespace nbasis::text {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

u64 parse_u64(const std::string& raw) {
  auto s = strip(raw);
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorCode::ParseError, "expected a non-negative integer, got '" + raw + "'");
  return v;
}

i64 parse_i64(const std::string& raw) {
  auto s = strip(raw);
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorCode::ParseError, "expected an integer, got '" + raw + "'");
  return v;
}

std::string format_vector(const Field& k, const std::vector<Field::Elem>& v) {
  std::vector<std::string> parts;
  parts.reserve(v.size());
  for (auto e : v) parts.push_back(k.format(e));
  return join(parts, ";");
}

std::vector<Field::Elem> parse_vector(const Field& k, const std::string& s) {
  if (strip(s).empty()) return {};
  std::vector<Field::Elem> out;
  for (const auto& part : split(s, ';')) out.push_back(k.parse(part));
  return out;
}

std::vector<Field::Elem> parse_coordinates(const Field& k, const std::string& s) {
  if (s.find(';') != std::string::npos) return parse_vector(k, s);
  std::vector<Field::Elem> out;
  for (const auto& part : split(s, ',')) out.push_back(k.from_int(parse_i64(part)));
  return out;
}

std::string format_coordinates(const Field& k, const std::vector<Field::Elem>& v) {
  for (auto e : v)
    if (!k.in_prime_field(e)) return format_vector(k, v);
  std::vector<std::string> parts;
  for (auto e : v) parts.push_back(std::to_string(e));
  return join(parts, ",");
}

std::vector<u64> parse_u64_list(const std::string& s) {
  std::vector<u64> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_u64(part));
  return out;
}

}  // namespace nbasis::text
