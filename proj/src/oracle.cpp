#include "rulerwrap/oracle.hpp"

#include <stdexcept>

namespace rulerwrap {

void enumerate_partitions(const SegmentLengths& lengths,
                          const std::function<void(const Partition&)>& visit) {
  const int n = lengths.size();
  if (n > kOracleMaxSegments) {
    throw std::invalid_argument("oracle: n = " + std::to_string(n) + " exceeds budget of " +
                                std::to_string(kOracleMaxSegments));
  }
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  std::vector<int> bps;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    bps.clear();
    bps.push_back(0);
    for (int g = 0; g < n - 1; ++g) {
      if (mask & (std::uint64_t{1} << g)) {
        bps.push_back(g + 1);
      }
    }
    bps.push_back(n);
    visit(Partition::normalized(bps, n));
  }
}

OracleReport brute_force_decide(const SegmentLengths& lengths, const RectangleBound& bound) {
  OracleReport report;
  std::vector<std::pair<Length, Length>> frontier_pool;
  enumerate_partitions(lengths, [&](const Partition& p) {
    ++report.examined;
    const std::vector<Length> sums = side_sums(lengths, p);
    const int t = static_cast<int>(sums.size());
    bool chain_ok = true;
    for (int j = 0; j + 2 < t; ++j) {
      if (sums[j] > sums[j + 2]) {
        chain_ok = false;
        break;
      }
    }
    if (chain_ok) {
      frontier_pool.emplace_back(sums[t - 2], sums[t - 1]);
    }
    if (!report.feasible) {
      const ValidationReport v = validate_wrapping(lengths, p, bound);
      if (v.ok()) {
        report.feasible = true;
        report.witness = WrapWitness{p, sums, v.verdict == Validity::ValidRotated};
      }
    }
  });
  report.frontier = pareto_minimal(std::move(frontier_pool));
  return report;
}

}  // namespace rulerwrap
