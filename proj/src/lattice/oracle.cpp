#include "checkerboard/lattice/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "checkerboard/error.hpp"
#include "combinations.hpp"

namespace checkerboard {

void CornerTally::add(const CornerKey& key, const PathCount& count) {
  if (count.is_zero()) return;
  counts_[key] += count;
}

PathCount CornerTally::at(const CornerKey& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? PathCount{} : it->second;
}

PathCount CornerTally::total() const {
  return sum_if([](const CornerKey&) { return true; });
}

PathCount LatticePathCounts::lookup(const std::map<int, PathCount>& m, int r) {
  const auto it = m.find(r);
  return it == m.end() ? PathCount{} : it->second;
}

namespace {

using LocalTally = std::map<CornerKey, std::uint64_t>;

// Bit j of mask set <=> step j goes right. Walks the path once.
CornerKey classify(std::uint32_t mask, int n, int arrival_x) {
  CornerKey key;
  int x = 0;
  bool touched_early = (arrival_x == 0);
  for (int j = 0; j < n; ++j) {
    x += ((mask >> j) & 1u) ? 1 : -1;
    if (j < n - 1 && x == arrival_x) touched_early = true;
  }
  key.first_arrival = !touched_early && x == arrival_x;
  key.alpha = (mask & 1u) ? Sign::Plus : Sign::Minus;
  key.beta = ((mask >> (n - 1)) & 1u) ? Sign::Plus : Sign::Minus;

  // Pair (j, j+1) differs <=> bit j of mask ^ (mask >> 1) is set.
  const std::uint32_t pair_bits = n >= 2 ? (std::uint32_t{1} << (n - 1)) - 1 : 0;
  const std::uint32_t shifted = mask >> 1;
  key.reversals = std::popcount((mask ^ shifted) & pair_bits);
  // Inner path = steps 1 .. n-2, so its pairs start at j = 1 .. n-3.
  const std::uint32_t inner_pairs = n >= 4 ? ((std::uint32_t{1} << (n - 2)) - 1) & ~1u : 0;
  key.r_l = std::popcount(mask & ~shifted & inner_pairs);  // right then left
  key.r_r = std::popcount(~mask & shifted & inner_pairs);  // left then right
  return key;
}

// Paths whose first `prefix_len` steps are given by `prefix`.
LocalTally enumerate_chunk(const GridSpec& grid, int arrival_x, int prefix_len,
                           std::uint32_t prefix) {
  LocalTally local;
  const int n = grid.n();
  const int rest = n - prefix_len;
  const int ones = grid.p() - std::popcount(prefix);
  detail::for_each_combination(rest, ones, [&](std::uint32_t suffix) {
    const std::uint32_t mask = prefix | (suffix << prefix_len);
    ++local[classify(mask, n, arrival_x)];
  });
  return local;
}

void check_size(int n) {
  if (n > kMaxEnumerationSteps) {
    throw SizeError("exhaustive enumeration is capped at N = 24 steps, got N = " +
                    std::to_string(n));
  }
}

}  // namespace

CornerTally enumerate_paths(const GridSpec& grid, int arrival_x, Execution execution) {
  check_size(grid.n());
  const int prefix_len = grid.n() < 6 ? grid.n() : 6;
  const int chunks = 1 << prefix_len;
  std::vector<LocalTally> partial(static_cast<std::size_t>(chunks));
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
      partial[static_cast<std::size_t>(c)] =
          enumerate_chunk(grid, arrival_x, prefix_len, static_cast<std::uint32_t>(c));
    }
  } else {
    for (int c = 0; c < chunks; ++c) {
      partial[static_cast<std::size_t>(c)] =
          enumerate_chunk(grid, arrival_x, prefix_len, static_cast<std::uint32_t>(c));
    }
  }
  CornerTally tally;
  for (const auto& local : partial) {
    for (const auto& [key, count] : local) tally.add(key, PathCount(count));
  }
  return tally;
}

LatticePathCounts enumerate_lattice_paths(int u0, int v0, int u1, int v1) {
  const int du = u1 - u0;
  const int dv = v1 - v0;
  if (du < 0 || dv < 0) throw DomainError("lattice paths only move up and right");
  const int n = du + dv;
  check_size(n);
  LatticePathCounts out;
  std::map<int, std::uint64_t> all_l, all_r, res_l, res_r;
  // Bit j set <=> step j is (1,0).
  detail::for_each_combination(n, du, [&](std::uint32_t mask) {
    int u = u0;
    int v = v0;
    bool admissible = v >= u;
    int r_l = 0;
    int r_r = 0;
    for (int j = 0; j < n; ++j) {
      const bool right = (mask >> j) & 1u;
      if (right) {
        ++u;
      } else {
        ++v;
      }
      if (u > v) admissible = false;
      if (j + 1 < n) {
        const bool next_right = (mask >> (j + 1)) & 1u;
        if (right && !next_right) ++r_l;
        if (!right && next_right) ++r_r;
      }
    }
    ++all_l[r_l];
    ++all_r[r_r];
    if (admissible) {
      ++res_l[r_l];
      ++res_r[r_r];
    }
  });
  auto convert = [](const std::map<int, std::uint64_t>& in, std::map<int, PathCount>& dst) {
    for (const auto& [r, c] : in) dst[r] = PathCount(c);
  };
  convert(all_l, out.all_by_l);
  convert(all_r, out.all_by_r);
  convert(res_l, out.restricted_by_l);
  convert(res_r, out.restricted_by_r);
  return out;
}

}  // namespace checkerboard
