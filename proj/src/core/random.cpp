#include "bstopo/core/random.hpp"

#include <cmath>

namespace bstopo {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_ids(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> ids) {
  std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t id : ids) h = mix64(h ^ mix64(id + 0x632be59bd9b4e019ULL));
  return h;
}

namespace {
double to_unit(std::uint64_t bits) {
  // 53 random bits mapped to {1, ..., 2^53} / 2^53.
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}
}  // namespace

double uniform_open_closed(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> ids) {
  return to_unit(hash_ids(seed, stream, ids));
}

std::uint32_t poisson_draw(double mean, std::uint64_t seed, Stream stream,
                           std::initializer_list<std::uint64_t> ids) {
  if (mean <= 0.0) return 0;
  const double u = to_unit(hash_ids(seed, stream, ids));
  // Inversion: smallest k with CDF(k) >= u. Work in log space for large means.
  double log_p = -mean;
  double cdf = std::exp(log_p);
  std::uint32_t k = 0;
  const double log_mean = std::log(mean);
  while (cdf < u && k < 100000) {
    ++k;
    log_p += log_mean - std::log(static_cast<double>(k));
    cdf += std::exp(log_p);
    if (std::exp(log_p) == 0.0 && k > mean) break;
  }
  return k;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

}  // namespace bstopo
