#include "bstopo/simplicial/profile.hpp"

#include "bstopo/core/error.hpp"
#include "bstopo/simplicial/rooted.hpp"

namespace bstopo::simplicial {

Profile local_profile(const SimplicialComplex& complex, std::size_t r) {
  if (complex.vertex_count() == 0) throw MalformedInput("local_profile: empty complex");
  if (r == 0) throw ContractError("local_profile: radius must be positive");
  std::map<std::string, std::int64_t> counts;
  RootedComplex rooted{complex, 0};
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    rooted.root = static_cast<Vertex>(v);
    ++counts[canonical_code(closed_ball(rooted, r))];
  }
  Profile out;
  out.radius = r;
  const auto n = static_cast<std::int64_t>(complex.vertex_count());
  for (const auto& [code, c] : counts) out.masses.emplace(code, Rational(c, n));
  return out;
}

Rational profile_distance(const Profile& p, const Profile& q) {
  if (p.radius != q.radius) throw ContractError("profile_distance: radius mismatch");
  Rational total(0);
  auto a = p.masses.begin();
  auto b = q.masses.begin();
  while (a != p.masses.end() || b != q.masses.end()) {
    if (b == q.masses.end() || (a != p.masses.end() && a->first < b->first)) {
      total += a->second;
      ++a;
    } else if (a == p.masses.end() || b->first < a->first) {
      total += b->second;
      ++b;
    } else {
      const Rational d = a->second - b->second;
      total += d < 0 ? -d : d;
      ++a;
      ++b;
    }
  }
  return total / 2;
}

}  // namespace bstopo::simplicial
