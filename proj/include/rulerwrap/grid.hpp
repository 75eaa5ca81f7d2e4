#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "rulerwrap/core.hpp"
#include "rulerwrap/rangemax.hpp"

namespace rulerwrap {

enum class RangeMaxBackend { Indexed, LinearScan };

// A discovered wrapping of the prefix l_1..l_m, identified by its last two
// side sums.  Grid encoding: point (prefix(m) + second_last, last) with
// weight prefix(m).
struct StoredWrapping {
  enum class Back { BaseSplit, ExtendedFromStored, ExtendedFromEmptyBase };

  int m = 0;
  Length second_last = 0;  // side not containing segment m
  Length last = 0;         // side containing segment m
  Back back = Back::BaseSplit;
  int fold_at = 0;     // BaseSplit: split index b.  Extended: fold index i'.
  int pred = -1;       // ExtendedFromStored: arena index of the predecessor;
                       // ExtendedFromEmptyBase: the i'' of (empty, l_1..l_i'').
};

// Single pass of the range-max driven dynamic program.  Run once per
// instance; decide() and frontier() read the recorded step-n wrappings and
// may be called repeatedly with different bounds.
class GridSolver {
 public:
  explicit GridSolver(const SegmentLengths& lengths,
                      RangeMaxBackend backend = RangeMaxBackend::Indexed);

  SolveOutcome decide(const RectangleBound& bound) const;
  std::vector<std::pair<Length, Length>> frontier() const;

  const SolveStats& stats() const { return stats_; }
  // Every wrapping recorded during the pass, in discovery order (test hook).
  const std::vector<StoredWrapping>& wrappings() const { return arena_; }

 private:
  void run(RangeMaxBackend backend);
  WrapWitness reconstruct(int arena_index, bool rotated) const;
  WrapWitness reconstruct_base(int split, bool rotated) const;

  const SegmentLengths& lengths_;
  std::vector<StoredWrapping> arena_;
  std::vector<int> final_derived_;  // arena indices of the m = n wrappings
  SolveStats stats_;
};

// Convenience wrappers over a one-shot GridSolver.
SolveOutcome decide_grid(const SegmentLengths& lengths, const RectangleBound& bound,
                         RangeMaxBackend backend = RangeMaxBackend::Indexed);
std::vector<std::pair<Length, Length>> frontier_grid(
    const SegmentLengths& lengths, RangeMaxBackend backend = RangeMaxBackend::Indexed);

}  // namespace rulerwrap
