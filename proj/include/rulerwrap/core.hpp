#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rulerwrap {

using Length = std::int64_t;

// Total length budget: coordinates of the form prefix(i) + k1 must stay
// below 2^62 in signed 64-bit arithmetic.
inline constexpr Length kMaxTotalLength = Length{1} << 61;

// The input ruler: positive segment lengths with precomputed prefix sums.
// Immutable after construction.
class SegmentLengths {
 public:
  explicit SegmentLengths(std::vector<Length> lengths);

  int size() const { return static_cast<int>(lengths_.size()); }
  std::span<const Length> lengths() const { return lengths_; }
  std::span<const Length> prefixes() const { return prefix_; }

  // prefix(i) = l_1 + ... + l_i, prefix(0) = 0.
  Length prefix(int i) const { return prefix_[static_cast<std::size_t>(i)]; }
  Length total() const { return prefix_.back(); }
  // Sum l_{a+1} + ... + l_b.
  Length range_sum(int a, int b) const { return prefix(b) - prefix(a); }

 private:
  std::vector<Length> lengths_;
  std::vector<Length> prefix_;
};

// Breakpoint sequence b_0..b_t encoding sides S_1..S_t.  b_0 = 0, b_t = n,
// t even and >= 2.  Only S_1 may be empty (b_0 == b_1); every later side
// holds at least one segment.
class Partition {
 public:
  Partition(std::vector<int> breakpoints, int n);

  // Builds a Partition from a raw side chain whose part count may be odd,
  // prepending (or dropping) an empty S_1 to reach even t.
  static Partition normalized(std::vector<int> breakpoints, int n);

  int side_count() const { return static_cast<int>(breakpoints_.size()) - 1; }
  const std::vector<int>& breakpoints() const { return breakpoints_; }
  int segment_count() const { return breakpoints_.back(); }

 private:
  std::vector<int> breakpoints_;
};

struct RectangleBound {
  Length height = 0;
  Length width = 0;
  bool allow_rotate = false;
};

enum class Validity { ValidAsGiven, ValidRotated, Invalid };

struct ValidationReport {
  Validity verdict = Validity::Invalid;
  std::string violation;  // set only when verdict == Invalid

  bool ok() const { return verdict != Validity::Invalid; }
};

struct WrapWitness {
  Partition partition;
  std::vector<Length> side_sums;
  bool rotated = false;  // bound satisfied with h and w swapped
};

struct SolveStats {
  std::uint64_t pairs_stored = 0;
  std::uint64_t points_inserted = 0;
  std::uint64_t queries_issued = 0;
  double elapsed_ms = 0.0;
};

struct SolveOutcome {
  bool feasible = false;
  std::optional<WrapWitness> witness;
  SolveStats stats;
};

// s_j = prefix(b_j) - prefix(b_{j-1}) for j = 1..t.  Throws
// std::invalid_argument if the partition does not match this instance.
std::vector<Length> side_sums(const SegmentLengths& lengths, const Partition& p);

// Checks the wrapping constraints: s_j <= s_{j+2} for 1 <= j <= t-2,
// s_{t-1} <= h and s_t <= w.  All comparisons are non-strict.  The rotated
// orientation is tried only when bound.allow_rotate is set.
ValidationReport validate_wrapping(const SegmentLengths& lengths, const Partition& p,
                                   const RectangleBound& bound);

// Fast certified-infeasible screen.  A true return is a proof of
// infeasibility; false promises nothing.
bool quick_infeasible(const SegmentLengths& lengths, const RectangleBound& bound);

// Pareto-minimal subset of (a, b) pairs: keeps p iff no other pair is <= p
// componentwise.  Result is sorted by first component ascending.
std::vector<std::pair<Length, Length>> pareto_minimal(
    std::vector<std::pair<Length, Length>> pairs);

}  // namespace rulerwrap
