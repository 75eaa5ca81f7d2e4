#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rulerwrap/core.hpp"

namespace rulerwrap {

// Default memory ceiling for the O(n^4)-time, O(n^3)-space table.
inline constexpr int kQuarticDefaultMaxSegments = 150;

// One feasible (k1, k2) side-sum pair for the list of segment i: the prefix
// l_1..l_i wraps with last side sum k2 (finishing at segment i) and
// second-to-last side sum k1.  Identified within its list by the decoded
// suffix boundaries (a, b): k2 = prefix(i) - prefix(b), k1 = prefix(b) -
// prefix(a).
struct PairEntry {
  Length k1 = 0;
  Length k2 = 0;
  int a = 0;
  int b = 0;
  // Provenance: back_list < 0 means a base t=2 split at b; otherwise the
  // entry extends list back_list's entry at back_index.
  int back_list = -1;
  int back_index = -1;

  bool is_base() const { return back_list < 0; }
};

class WrapTable {
 public:
  WrapTable(int n, Length total, std::vector<std::vector<PairEntry>> lists)
      : n_(n), total_(total), lists_(std::move(lists)) {}

  int size() const { return n_; }
  Length total() const { return total_; }
  // Deduplicated pair list for segment i, 1 <= i <= n.
  const std::vector<PairEntry>& list(int i) const {
    return lists_[static_cast<std::size_t>(i - 1)];
  }
  std::uint64_t entry_count() const;

 private:
  int n_;
  Length total_;
  std::vector<std::vector<PairEntry>> lists_;
};

// Builds all per-segment pair lists, deduplicated by (a, b) identity with the
// first-discovered backpointer retained.  Independent of any rectangle bound.
WrapTable build_table(const SegmentLengths& lengths,
                      int max_segments = kQuarticDefaultMaxSegments);

// Feasible iff list n holds an entry with k1 <= h and k2 <= w (or the swapped
// test when rotation is allowed).  The witness is rebuilt from backpointers.
SolveOutcome decide_quartic(const WrapTable& table, const SegmentLengths& lengths,
                            const RectangleBound& bound);

// Pareto-minimal subset of list n's (k1, k2) pairs.
std::vector<std::pair<Length, Length>> frontier_quartic(const WrapTable& table);

}  // namespace rulerwrap
