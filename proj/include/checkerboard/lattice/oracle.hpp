#pragma once

#include <compare>
#include <cstddef>
#include <map>

#include "checkerboard/component.hpp"
#include "checkerboard/lattice/grid.hpp"
#include "checkerboard/numerics/binomial.hpp"

// Exhaustive enumeration oracles. These walk every path and count corners
// directly; they share no code with the closed-form counts and define ground
// truth for them.

namespace checkerboard {

inline constexpr int kMaxEnumerationSteps = 24;

struct CornerKey {
  int r_r = 0;            // r-corners of the inner path (first/last step removed)
  int r_l = 0;            // l-corners of the inner path
  bool first_arrival = false;
  Sign alpha = Sign::Plus;  // first step
  Sign beta = Sign::Plus;   // last step
  int reversals = 0;      // direction changes along the full path

  friend auto operator<=>(const CornerKey&, const CornerKey&) = default;
};

class CornerTally {
 public:
  void add(const CornerKey& key, const PathCount& count);
  PathCount at(const CornerKey& key) const;
  PathCount total() const;

  // Sum over all keys accepted by the predicate.
  template <class Pred>
  PathCount sum_if(Pred&& pred) const {
    PathCount s;
    for (const auto& [k, v] : counts_) {
      if (pred(k)) s += v;
    }
    return s;
  }

  const std::map<CornerKey, PathCount>& entries() const { return counts_; }

  friend bool operator==(const CornerTally&, const CornerTally&) = default;

 private:
  std::map<CornerKey, PathCount> counts_;
};

// Every N-step path with the grid's P right and Q left steps, tallied by
// corner counts, end directions and whether x first reaches arrival_x at the
// final step (positions relative to the start). Throws SizeError for N > 24.
// Parallel over the leading step pattern; the result equals the serial one.
CornerTally enumerate_paths(const GridSpec& grid, int arrival_x,
                            Execution execution = Execution::Parallel);

// Counts of monotone lattice paths from (u0, v0) to (u1, v1) by corner type.
// "restricted" keeps only paths whose every visited point has v >= u.
struct LatticePathCounts {
  std::map<int, PathCount> all_by_l;
  std::map<int, PathCount> all_by_r;
  std::map<int, PathCount> restricted_by_l;
  std::map<int, PathCount> restricted_by_r;

  static PathCount lookup(const std::map<int, PathCount>& m, int r);
};

// Throws SizeError when the path length exceeds 24 steps.
LatticePathCounts enumerate_lattice_paths(int u0, int v0, int u1, int v1);

}  // namespace checkerboard
