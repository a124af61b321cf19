#include "bstopo/mmspace/space_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {
namespace {

// Splits into whitespace-separated tokens per non-comment line.
std::vector<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    lines.push_back(std::move(tokens));
  }
  return lines;
}

double number(const std::string& tok) {
  try {
    if (tok.find('/') != std::string::npos) return to_double(parse_rational(tok));
    return parse_double(tok);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + tok + "'");
  }
}

}  // namespace

FiniteMMSpace parse_space(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::vector<std::string>& {
    if (at >= lines.size()) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return lines[at++];
  };
  const auto& header = next("'points <n>'");
  if (header.size() != 2 || header[0] != "points") throw ParseError("expected 'points <n>'");
  std::size_t n = 0;
  {
    const auto& s = header[1];
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || n == 0) throw ParseError("bad point count '" + s + "'");
  }
  const auto& kind = next("'matrix' or 'coords'");
  std::vector<double> values;
  std::size_t dim = 0;
  double period = 0.0;
  bool matrix = false;
  if (kind.size() == 1 && kind[0] == "matrix") {
    matrix = true;
    dim = n;
  } else if (kind.size() >= 3 && kind[0] == "coords") {
    const auto res = std::from_chars(kind[1].data(), kind[1].data() + kind[1].size(), dim);
    if (res.ec != std::errc{} || dim == 0) throw ParseError("bad coordinate dimension '" + kind[1] + "'");
    if (kind[2] == "flat" && kind.size() == 3) {
      period = 0.0;
    } else if (kind[2] == "torus" && kind.size() == 4) {
      period = number(kind[3]);
      if (!(period > 0.0)) throw ParseError("torus period must be positive");
    } else {
      throw ParseError("expected 'coords <d> flat' or 'coords <d> torus <L>'");
    }
  } else {
    throw ParseError("expected 'matrix' or 'coords'");
  }
  std::vector<double> rows(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = next("a data row");
    if (row.size() != dim) throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " + std::to_string(dim));
    for (std::size_t j = 0; j < dim; ++j) {
      // Coordinates are stored axis-major.
      if (matrix) {
        rows[i * n + j] = number(row[j]);
      } else {
        rows[j * n + i] = number(row[j]);
      }
    }
  }
  const auto& wh = next("'weights'");
  if (wh.size() != 1 || wh[0] != "weights") throw ParseError("expected 'weights'");
  const auto& wrow = next("a weight row");
  if (wrow.size() != n) throw ParseError("expected " + std::to_string(n) + " weights");
  std::vector<Rational> weights;
  for (const auto& tok : wrow) {
    try {
      weights.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw ParseError("bad weight '" + tok + "'");
    }
  }
  if (at != lines.size()) throw ParseError("trailing content after weights");
  if (matrix) return FiniteMMSpace::from_matrix(std::move(rows), std::move(weights));
  return FiniteMMSpace::from_coords(dim, std::move(rows), period, std::move(weights));
}

FiniteMMSpace read_space(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

std::string format_space(const FiniteMMSpace& space) {
  const std::size_t n = space.size();
  std::string out = "points " + std::to_string(n) + "\n";
  auto row_out = [&](auto&& get, std::size_t width) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j > 0) out.push_back(' ');
      out += format_double(get(j));
    }
    out.push_back('\n');
  };
  if (space.geometry() == FiniteMMSpace::Geometry::Matrix) {
    out += "matrix\n";
    for (std::size_t i = 0; i < n; ++i) row_out([&](std::size_t j) { return space.matrix()[i * n + j]; }, n);
  } else {
    out += "coords " + std::to_string(space.dim()) +
           (space.geometry() == FiniteMMSpace::Geometry::Torus ? " torus " + format_double(space.period()) : " flat") +
           "\n";
    for (std::size_t i = 0; i < n; ++i)
      row_out([&](std::size_t j) { return space.coords()[j * n + i]; }, space.dim());
  }
  out += "weights\n";
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out.push_back(' ');
    out += format_rational(space.weight(i));
  }
  out.push_back('\n');
  return out;
}

void write_space(const std::filesystem::path& path, const FiniteMMSpace& space) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_space(space);
}

}  // namespace bstopo::mm
