#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rulerwrap/core.hpp"

namespace rulerwrap {

// Enumeration budget: 2^(n-1) candidate partitions.
inline constexpr int kOracleMaxSegments = 24;

struct OracleReport {
  bool feasible = false;
  std::optional<WrapWitness> witness;
  std::uint64_t examined = 0;
  // Pareto-minimal (s_{t-1}, s_t) over all chain-satisfying partitions,
  // rectangle bounds ignored.
  std::vector<std::pair<Length, Length>> frontier;
};

// Visits every composition of the n segments into nonempty consecutive runs
// (one per subset of the n-1 gaps, in increasing binary order), each
// normalized to even t by prepending an empty S_1 when the run count is odd.
// Exactly 2^(n-1) partitions.
void enumerate_partitions(const SegmentLengths& lengths,
                          const std::function<void(const Partition&)>& visit);

// Exhaustive ground-truth decision procedure.  No pruning by design.
OracleReport brute_force_decide(const SegmentLengths& lengths, const RectangleBound& bound);

}  // namespace rulerwrap
