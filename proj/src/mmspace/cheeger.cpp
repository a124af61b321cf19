#include "bstopo/mmspace/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::mm {
namespace {

PointSet normalized(const FiniteMMSpace& space, const PointSet& points) {
  PointSet out(points);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= space.size()) throw ContractError("point index out of range");
  return out;
}

// Weights as integers over a common denominator.
struct Units {
  std::vector<std::int64_t> of;
  std::int64_t denominator = 1;
  std::int64_t total = 0;

  explicit Units(const FiniteMMSpace& space) {
    for (const auto& w : space.weights()) denominator = std::lcm(denominator, w.denominator());
    for (const auto& w : space.weights()) {
      of.push_back(w.numerator() * (denominator / w.denominator()));
      total += of.back();
    }
  }
};

// a/b < c/d for positive denominators.
bool less_ratio(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

// Sparse neighbourhoods shared by both Cheeger modes.
struct Neighborhoods {
  std::vector<PointSet> step;  // within h, excluding self
  std::vector<PointSet> ball;  // within r, including self

  Neighborhoods(const FiniteMMSpace& space, double h, double r) : step(space.size()), ball(space.size()) {
    std::vector<double> row(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      space.distance_row(i, row);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != i && within_closed(row[j], h)) step[i].push_back(static_cast<std::uint32_t>(j));
        if (within_closed(row[j], r)) ball[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
};

class ExactSearch {
 public:
  ExactSearch(const FiniteMMSpace& space, const Neighborhoods& nb) : units_(space), n_(space.size()) {
    step_.assign(n_, 0);
    ball_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (auto j : nb.step[i]) step_[i] |= bit(j);
      for (auto j : nb.ball[i]) ball_[i] |= bit(j);
    }
    all_ = n_ == 64 ? ~0ULL : (bit(n_) - 1);
  }

  std::optional<CheegerResult> run() {
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint64_t below = (bit(v) << 1) - 1;  // v and every smaller index
      if (2 * units_.of[v] > units_.total) continue;
      rec(bit(v), step_[v] & ~below, below, units_.of[v]);
    }
    if (!best_mask_) return std::nullopt;
    CheegerResult out;
    out.value = Rational(best_num_, best_den_);
    for (std::size_t i = 0; i < n_; ++i)
      if (*best_mask_ & bit(i)) out.witness.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  void evaluate(std::uint64_t S, std::int64_t vol) {
    std::uint64_t collar = 0;
    const std::uint64_t outside = all_ & ~S;
    for (std::uint64_t m = S; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      if (step_[static_cast<std::size_t>(x)] & outside) collar |= ball_[static_cast<std::size_t>(x)];
    }
    std::int64_t cvol = 0;
    for (std::uint64_t m = collar; m; m &= m - 1) cvol += units_.of[static_cast<std::size_t>(std::countr_zero(m))];
    if (!best_mask_ || less_ratio(cvol, vol, best_num_, best_den_)) {
      best_mask_ = S;
      best_num_ = cvol;
      best_den_ = vol;
    }
  }

  // Each connected set containing S, avoiding X, is reached once: every
  // candidate is either added or excluded for the rest of the branch.
  void rec(std::uint64_t S, std::uint64_t cand, std::uint64_t X, std::int64_t vol) {
    evaluate(S, vol);
    while (cand) {
      const std::uint64_t w = cand & (~cand + 1);
      cand ^= w;
      const auto wi = static_cast<std::size_t>(std::countr_zero(w));
      const std::int64_t next_vol = vol + units_.of[wi];
      if (2 * next_vol <= units_.total) {
        const std::uint64_t S2 = S | w;
        rec(S2, (cand | step_[wi]) & ~S2 & ~X, X, next_vol);
      }
      X |= w;
    }
  }

  Units units_;
  std::size_t n_;
  std::vector<std::uint64_t> step_;
  std::vector<std::uint64_t> ball_;
  std::uint64_t all_ = 0;
  std::optional<std::uint64_t> best_mask_;
  std::int64_t best_num_ = 0;
  std::int64_t best_den_ = 1;
};

class HeuristicSearch {
 public:
  HeuristicSearch(const FiniteMMSpace& space, const Neighborhoods& nb, const CheegerOptions& options)
      : space_(space), nb_(nb), units_(space), options_(options), n_(space.size()) {}

  std::optional<CheegerResult> run() {
    ball_sweep();
    anneal();
    if (best_.empty()) return std::nullopt;
    CheegerResult out;
    out.value = Rational(best_num_, best_den_);
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

 private:
  // Collar volume of the set given by membership flags.
  std::int64_t collar_units(const std::vector<char>& in, const PointSet& members) {
    mark_.assign(n_, 0);
    std::int64_t total = 0;
    for (auto x : members) {
      bool boundary = false;
      for (auto y : nb_.step[x])
        if (!in[y]) {
          boundary = true;
          break;
        }
      if (!boundary) continue;
      for (auto z : nb_.ball[x])
        if (!mark_[z]) {
          mark_[z] = 1;
          total += units_.of[z];
        }
    }
    return total;
  }

  void offer(const std::vector<char>& in, const PointSet& members, std::int64_t vol) {
    if (members.empty() || 2 * vol > units_.total) return;
    const auto c = collar_units(in, members);
    if (best_.empty() || less_ratio(c, vol, best_num_, best_den_)) {
      best_ = members;
      best_num_ = c;
      best_den_ = vol;
    }
  }

  // Component of `seed` inside the flagged set.
  PointSet component(const std::vector<char>& in, std::uint32_t seed) {
    PointSet out{seed};
    std::vector<char> seen(n_, 0);
    seen[seed] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
      for (auto y : nb_.step[out[head]])
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
    return out;
  }

  void ball_sweep() {
    const std::size_t centers = std::min<std::size_t>(n_, 64);
    std::vector<double> row(n_);
    std::vector<std::uint32_t> order(n_);
    for (std::size_t c = 0; c < centers; ++c) {
      const auto p = static_cast<std::uint32_t>(c * n_ / centers);
      space_.distance_row(p, row);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return row[a] < row[b]; });
      std::vector<char> in(n_, 0);
      std::int64_t vol = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        in[order[i]] = 1;
        vol += units_.of[order[i]];
        if (2 * vol > units_.total) break;
        if (i + 1 < n_ && row[order[i + 1]] == row[order[i]]) continue;
        auto comp = component(in, p);
        std::vector<char> cin(n_, 0);
        std::int64_t cvol = 0;
        for (auto x : comp) {
          cin[x] = 1;
          cvol += units_.of[x];
        }
        offer(cin, comp, cvol);
      }
    }
  }

  bool connected_without(const std::vector<char>& in, const PointSet& members, std::uint32_t removed) {
    if (members.size() <= 1) return false;
    std::uint32_t start = members[0] == removed ? members[1] : members[0];
    std::vector<char> tmp(in);
    tmp[removed] = 0;
    return component(tmp, start).size() == members.size() - 1;
  }

  void anneal() {
    if (best_.empty() || options_.anneal_steps == 0) return;
    SplitMix64 rng(hash_ids(options_.seed, Stream::Annealing, {n_}));
    std::vector<char> in(n_, 0);
    PointSet members = best_;
    std::int64_t vol = 0;
    for (auto x : members) {
      in[x] = 1;
      vol += units_.of[x];
    }
    double energy = static_cast<double>(collar_units(in, members)) / static_cast<double>(vol);
    const double t0 = 0.25;
    const double t1 = 1e-3;
    std::vector<std::uint32_t> moves;
    for (std::size_t step = 0; step < options_.anneal_steps; ++step) {
      const double temp = t0 * std::pow(t1 / t0, static_cast<double>(step) / static_cast<double>(options_.anneal_steps));
      moves.clear();
      mark_.assign(n_, 0);
      for (auto x : members) {
        moves.push_back(x);
        for (auto y : nb_.step[x])
          if (!in[y] && !mark_[y]) {
            mark_[y] = 1;
            moves.push_back(y);
          }
      }
      const auto x = moves[rng.below(moves.size())];
      std::int64_t next_vol = vol;
      if (in[x]) {
        if (!connected_without(in, members, x)) continue;
        next_vol -= units_.of[x];
      } else {
        next_vol += units_.of[x];
        if (2 * next_vol > units_.total) continue;
      }
      in[x] ^= 1;
      PointSet next;
      for (auto m : members)
        if (m != x) next.push_back(m);
      if (in[x]) next.push_back(x);
      const auto c = collar_units(in, next);
      const double e = static_cast<double>(c) / static_cast<double>(next_vol);
      if (e <= energy || rng.uniform() < std::exp((energy - e) / temp)) {
        members.swap(next);
        vol = next_vol;
        energy = e;
        if (less_ratio(c, vol, best_num_, best_den_)) {
          best_ = members;
          best_num_ = c;
          best_den_ = vol;
        }
      } else {
        in[x] ^= 1;
      }
    }
  }

  const FiniteMMSpace& space_;
  const Neighborhoods& nb_;
  Units units_;
  CheegerOptions options_;
  std::size_t n_;
  std::vector<char> mark_;
  PointSet best_;
  std::int64_t best_num_ = 0;
  std::int64_t best_den_ = 1;
};

}  // namespace

Collar boundary_and_collar(const FiniteMMSpace& space, const PointSet& M, double r, double h) {
  const auto members = normalized(space, M);
  if (members.empty()) throw ContractError("boundary_and_collar: M is empty");
  if (members.size() == space.size()) throw ContractError("boundary_and_collar: M is the whole space");
  if (r < 0.0) throw ContractError("boundary_and_collar: r must be non-negative");
  const std::size_t n = space.size();
  std::vector<char> in(n, 0);
  for (auto x : members) in[x] = 1;
  Collar out;
  std::vector<double> row(n);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  for (auto x : members) {
    space.distance_row(x, row);
    bool boundary = false;
    for (std::size_t y = 0; y < n && !boundary; ++y) boundary = !in[y] && within_closed(row[y], h);
    if (!boundary) continue;
    out.boundary.push_back(x);
    kernels::min_inplace(nearest, row);
  }
  for (std::size_t z = 0; z < n; ++z) {
    if (within_closed(nearest[z], r)) {
      out.collar.push_back(static_cast<std::uint32_t>(z));
      out.collar_volume += space.weight(z);
    }
  }
  return out;
}

CheegerResult cheeger_radius_r(const FiniteMMSpace& space, double r, const CheegerOptions& options) {
  if (!(r > 0.0)) throw ContractError("cheeger_radius_r: r must be positive");
  const std::size_t n = space.size();
  if (options.mode == CheegerMode::Exact && (n > options.exhaustive_cap || n > 64)) {
    throw ContractError("cheeger_radius_r: " + std::to_string(n) + " points exceed the exhaustive cap of " +
                        std::to_string(std::min<std::size_t>(options.exhaustive_cap, 64)));
  }
  const Neighborhoods nb(space, space.resolution(), r);
  std::optional<CheegerResult> result;
  if (options.mode == CheegerMode::Exact) {
    result = ExactSearch(space, nb).run();
  } else {
    result = HeuristicSearch(space, nb, options).run();
  }
  if (!result) throw ContractError("cheeger_radius_r: no subset has at most half the volume");
  return *result;
}

std::vector<PointSet> h_components(const FiniteMMSpace& space, const PointSet& points, double h) {
  const auto members = normalized(space, points);
  const std::size_t n = space.size();
  std::vector<char> in(n, 0);
  for (auto x : members) in[x] = 1;
  std::vector<char> seen(n, 0);
  std::vector<PointSet> out;
  std::vector<double> row(n);
  for (auto s : members) {
    if (seen[s]) continue;
    PointSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      space.distance_row(comp[head], row);
      for (std::size_t y = 0; y < n; ++y)
        if (in[y] && !seen[y] && y != comp[head] && within_closed(row[y], h)) {
          seen[y] = 1;
          comp.push_back(static_cast<std::uint32_t>(y));
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

PointSet haircut(const FiniteMMSpace& space, const PointSet& A, double r) {
  if (!(r > 0.0)) throw ContractError("haircut: r must be positive");
  const auto a = normalized(space, A);
  if (a.empty()) throw ContractError("haircut: A is empty");
  const std::size_t n = space.size();
  const Units units(space);
  std::vector<char> in(n, 0);
  for (auto x : a) in[x] = 1;
  PointSet majority;
  std::vector<double> row(n);
  for (std::size_t p = 0; p < n; ++p) {
    space.distance_row(p, row);
    std::int64_t ball = 0;
    std::int64_t inside = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (!within_closed(row[q], r)) continue;
      ball += units.of[q];
      if (in[q]) inside += units.of[q];
    }
    if (2 * inside > ball) majority.push_back(static_cast<std::uint32_t>(p));
  }
  if (majority.empty()) return {};
  const double h = space.resolution();
  PointSet best;
  Rational best_ratio;
  for (auto& comp : h_components(space, majority, h)) {
    Rational ratio(0);
    if (comp.size() < n) ratio = boundary_and_collar(space, comp, h, h).collar_volume / space.volume_of(comp);
    if (best.empty() || ratio < best_ratio) {
      best = std::move(comp);
      best_ratio = ratio;
    }
  }
  return best;
}

}  // namespace bstopo::mm
