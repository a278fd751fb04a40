#pragma once

#include <string>

#include "nbasis/context.hpp"

namespace nbasis {

constexpr const char* kContextVersion = "nbasis-context 1";

// Line-oriented key=value text; deterministic so write -> read -> write is byte-identical.
std::string serialize_context(const NormalBasisContext& ctx);
// ParseError on malformed or inconsistent input.
NormalBasisContext parse_context(const std::string& text);

void save_context(const NormalBasisContext& ctx, const std::string& path);
NormalBasisContext load_context(const std::string& path);

}  // namespace nbasis
