#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bstopo/simplicial/complex.hpp"

namespace bstopo::simplicial {

// One maximal simplex per line as space-separated vertex ids; lines starting
// with '#' and blank lines are skipped. Throws ParseError on bad tokens.
SimplicialComplex parse_complex(std::string_view text, int max_dim = kDefaultMaxDim);
SimplicialComplex read_complex(const std::filesystem::path& path, int max_dim = kDefaultMaxDim);

// Maximal simplices in lexicographic order; isolated vertices as one-id lines.
std::string format_complex(const SimplicialComplex& complex);
void write_complex(const std::filesystem::path& path, const SimplicialComplex& complex);

}  // namespace bstopo::simplicial
