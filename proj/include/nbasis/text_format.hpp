#pragma once

#include <string>
#include <vector>

#include "nbasis/field.hpp"

namespace nbasis::text {

std::vector<std::string> split(const std::string& s, char sep);
std::string strip(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
u64 parse_u64(const std::string& s);  // ParseError
i64 parse_i64(const std::string& s);  // ParseError

// CyclicVector: entries joined by ';', each in FieldElement form.
std::string format_vector(const Field& k, const std::vector<Field::Elem>& v);
std::vector<Field::Elem> parse_vector(const Field& k, const std::string& s);

// Coordinate input accepted by the CLI: ';'-joined K-elements, or, when no ';'
// occurs, a ','-joined list of prime-field scalars.
std::vector<Field::Elem> parse_coordinates(const Field& k, const std::string& s);
// Inverse of parse_coordinates: ','-joined scalars when every entry lies in F_p.
std::string format_coordinates(const Field& k, const std::vector<Field::Elem>& v);

// Comma-separated integer list.
std::vector<u64> parse_u64_list(const std::string& s);

}  // namespace nbasis::text
