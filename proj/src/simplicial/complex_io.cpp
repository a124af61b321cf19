#include "bstopo/simplicial/complex_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bstopo/core/error.hpp"

namespace bstopo::simplicial {

SimplicialComplex parse_complex(std::string_view text, int max_dim) {
  SimplexList simplices;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::vector<Vertex> s;
    std::size_t pos = first;
    while (pos < line.size()) {
      const auto end = std::min(line.find_first_of(" \t", pos), line.size());
      Vertex v = 0;
      const auto res = std::from_chars(line.data() + pos, line.data() + end, v);
      if (res.ec != std::errc{} || res.ptr != line.data() + end) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" +
                         std::string(line.substr(pos, end - pos)) + "'");
      }
      s.push_back(v);
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(simplices, max_dim);
}

SimplicialComplex read_complex(const std::filesystem::path& path, int max_dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), max_dim);
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& s : complex.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(s[i]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_complex(const std::filesystem::path& path, const SimplicialComplex& complex) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_complex(complex);
}

}  // namespace bstopo::simplicial
