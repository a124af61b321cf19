#pragma once

#include <cstdint>
#include <initializer_list>

namespace bstopo {

// Every random quantity is a pure function of (seed, stream, ids): no
// generator state is carried between calls, so results do not depend on
// evaluation order.
enum class Stream : std::uint64_t {
  PoissonCount = 1,
  Mark = 2,
  PairVariable = 3,
  Radius = 4,
  ForestOffset = 5,
  Experiment = 6,
  Annealing = 7,
  Diagnostic = 8,
};

std::uint64_t mix64(std::uint64_t x);

std::uint64_t hash_ids(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> ids);

// Uniform on (0, 1]; never returns 0.
double uniform_open_closed(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> ids);

// Poisson(mean) by inversion on a counter-derived uniform.
std::uint32_t poisson_draw(double mean, std::uint64_t seed, Stream stream,
                           std::initializer_list<std::uint64_t> ids);

// Small sequential generator seeded from a hash, for search heuristics that
// consume an unbounded number of draws.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace bstopo
