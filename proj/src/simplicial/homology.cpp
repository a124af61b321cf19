#include "bstopo/simplicial/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bstopo/core/error.hpp"

namespace bstopo::simplicial {
namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Coboundary in column-compressed form: column j is the k-simplex j, rows
// are (k+1)-simplex indices in increasing order.
struct Coboundary {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> rows;
  std::vector<std::int8_t> signs;
  std::size_t columns() const { return offsets.size() - 1; }
};

Coboundary build_coboundary(const SimplicialComplex& complex, int k) {
  Coboundary cb;
  const std::size_t cols = complex.count(k);
  const std::size_t cofaces = complex.count(k + 1);
  cb.offsets.assign(cols + 1, 0);
  if (cofaces == 0) return cb;
  const std::size_t w = static_cast<std::size_t>(k) + 2;
  if (cofaces > std::numeric_limits<std::uint32_t>::max()) throw ContractError("too many simplices for homology");
  std::vector<std::uint32_t> face_of(cofaces * w);
  std::vector<Vertex> face(w - 1);
  for (std::size_t t = 0; t < cofaces; ++t) {
    const auto s = complex.simplex(k + 1, t);
    for (std::size_t drop = 0; drop < w; ++drop) {
      std::size_t pos = 0;
      for (std::size_t j = 0; j < w; ++j)
        if (j != drop) face[pos++] = s[j];
      const auto idx = complex.find(face);
      face_of[t * w + drop] = static_cast<std::uint32_t>(*idx);
      ++cb.offsets[*idx + 1];
    }
  }
  std::partial_sum(cb.offsets.begin(), cb.offsets.end(), cb.offsets.begin());
  cb.rows.resize(cb.offsets.back());
  cb.signs.resize(cb.offsets.back());
  std::vector<std::size_t> fill(cb.offsets.begin(), cb.offsets.end() - 1);
  for (std::size_t t = 0; t < cofaces; ++t) {
    for (std::size_t drop = 0; drop < w; ++drop) {
      const auto col = face_of[t * w + drop];
      const auto at = fill[col]++;
      cb.rows[at] = static_cast<std::uint32_t>(t);
      cb.signs[at] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return cb;
}

template <class T>
struct Entry {
  std::uint32_t row;
  T value;
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline std::int64_t abs_of(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
inline BigInt abs_of(const BigInt& a) { return boost::multiprecision::abs(a); }

// Rank of the coboundary matrix by fraction-free column reduction. Columns
// flagged in `skip` are known to reduce to zero. Pivot rows of the reduced
// columns are written to `pivots`.
template <class T>
std::size_t reduce(const Coboundary& cb, const std::vector<bool>& skip, std::vector<std::uint32_t>& pivots) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const std::size_t cols = cb.columns();
  std::size_t max_row = 0;
  for (auto r : cb.rows) max_row = std::max<std::size_t>(max_row, r + 1);
  // owner[row] = column whose reduced form has its lowest entry at `row`.
  std::vector<std::uint32_t> owner(max_row, kNone);
  // Reduced columns that differ from the original; unmodified ones are read
  // straight from cb.
  std::vector<std::uint32_t> stored_at(cols, kNone);
  std::vector<std::vector<Entry<T>>> stored;

  std::vector<Entry<T>> work;
  std::vector<Entry<T>> scratch;
  auto load = [&](std::size_t col, std::vector<Entry<T>>& dst) {
    dst.clear();
    if (stored_at[col] != kNone) {
      dst = stored[stored_at[col]];
      return;
    }
    for (std::size_t i = cb.offsets[col]; i < cb.offsets[col + 1]; ++i) dst.push_back({cb.rows[i], T(cb.signs[i])});
  };
  std::vector<Entry<T>> other;

  pivots.clear();
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (skip[j] || cb.offsets[j] == cb.offsets[j + 1]) continue;
    // Apparent pivot: an unmodified column whose lowest row is free.
    const std::uint32_t low0 = cb.rows[cb.offsets[j + 1] - 1];
    if (owner[low0] == kNone) {
      owner[low0] = static_cast<std::uint32_t>(j);
      pivots.push_back(low0);
      ++rank;
      continue;
    }
    load(j, work);
    bool modified = false;
    while (!work.empty()) {
      const auto low = work.back().row;
      const auto o = owner[low];
      if (o == kNone) break;
      load(o, other);
      const T a = work.back().value;
      const T b = other.back().value;
      const T g = gcd_of(a, b);
      const T ca = b / g;  // multiplier for work
      const T cb_ = a / g; // multiplier for other
      scratch.clear();
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < work.size() || y < other.size()) {
        if (y == other.size() || (x < work.size() && work[x].row < other[y].row)) {
          scratch.push_back({work[x].row, checked_mul(work[x].value, ca)});
          ++x;
        } else if (x == work.size() || other[y].row < work[x].row) {
          scratch.push_back({other[y].row, checked_sub(T(0), checked_mul(other[y].value, cb_))});
          ++y;
        } else {
          T v = checked_sub(checked_mul(work[x].value, ca), checked_mul(other[y].value, cb_));
          if (v != 0) scratch.push_back({work[x].row, v});
          ++x;
          ++y;
        }
      }
      T content(0);
      for (const auto& e : scratch) {
        content = gcd_of(content, abs_of(e.value));
        if (content == 1) break;
      }
      if (content > 1)
        for (auto& e : scratch) e.value /= content;
      work.swap(scratch);
      modified = true;
    }
    if (work.empty()) continue;
    const auto low = work.back().row;
    owner[low] = static_cast<std::uint32_t>(j);
    pivots.push_back(low);
    ++rank;
    if (modified) {
      stored_at[j] = static_cast<std::uint32_t>(stored.size());
      stored.push_back(work);
    }
  }
  return rank;
}

std::size_t rank_with_fallback(const Coboundary& cb, const std::vector<bool>& skip, std::vector<std::uint32_t>& pivots) {
  try {
    return reduce<std::int64_t>(cb, skip, pivots);
  } catch (const Overflow&) {
    return reduce<BigInt>(cb, skip, pivots);
  }
}

}  // namespace

std::size_t coboundary_rank(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.max_dim()) throw ContractError("coboundary_rank: dimension out of range");
  const auto cb = build_coboundary(complex, k);
  std::vector<bool> skip(cb.columns(), false);
  std::vector<std::uint32_t> pivots;
  return rank_with_fallback(cb, skip, pivots);
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, int up_to) {
  if (up_to < 0) throw ContractError("up_to must be non-negative");
  const int limit = complex.truncated() ? complex.max_dim() - 1 : complex.max_dim();
  if (up_to > limit) {
    throw ContractError("betti_numbers: up_to " + std::to_string(up_to) + " exceeds " + std::to_string(limit) +
                        (complex.truncated() ? " (complex truncated at max_dim " + std::to_string(complex.max_dim()) + ")"
                                             : " (max_dim)"));
  }
  // rank[k] = rank of the coboundary C^k -> C^{k+1}. A k-simplex that is the
  // pivot of a reduced column one dimension down is a coboundary's leading
  // term, so its own column reduces to zero and is skipped (clearing).
  std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 1, 0);
  std::vector<std::uint32_t> pivots;
  for (int k = 0; k <= up_to; ++k) {
    const auto cb = build_coboundary(complex, k);
    std::vector<bool> skip(cb.columns(), false);
    for (auto p : pivots) skip[p] = true;
    rank[static_cast<std::size_t>(k)] = rank_with_fallback(cb, skip, pivots);
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k <= up_to; ++k) {
    const std::size_t below = k > 0 ? rank[static_cast<std::size_t>(k - 1)] : 0;
    betti.push_back(complex.count(k) - rank[static_cast<std::size_t>(k)] - below);
  }
  return betti;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  for (int k = 0; k <= complex.top_dim(); ++k) {
    const auto c = static_cast<std::int64_t>(complex.count(k));
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

}  // namespace bstopo::simplicial
