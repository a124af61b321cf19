#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

// Text format:
//   points <n>
//   matrix                      | coords <d> flat | coords <d> torus <L>
//   n rows of n distances       | n rows of d coordinates
//   weights
//   one row of n weights (decimals or p/q)
// '#' comment lines and blank lines are ignored. Throws ParseError on
// malformed text and MalformedInput on an invalid space.
FiniteMMSpace parse_space(std::string_view text);
FiniteMMSpace read_space(const std::filesystem::path& path);

// Canonical text: shortest round-trip decimals, one row per line.
std::string format_space(const FiniteMMSpace& space);
void write_space(const std::filesystem::path& path, const FiniteMMSpace& space);

}  // namespace bstopo::mm
