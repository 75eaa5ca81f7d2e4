#include "rulerwrap/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace rulerwrap {

SegmentLengths::SegmentLengths(std::vector<Length> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) {
    throw std::invalid_argument("segment lengths: at least one segment required");
  }
  prefix_.reserve(lengths_.size() + 1);
  prefix_.push_back(0);
  Length sum = 0;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    const Length len = lengths_[i];
    if (len < 1) {
      throw std::invalid_argument("segment lengths: length " + std::to_string(i + 1) +
                                  " must be positive");
    }
    if (len > kMaxTotalLength - sum) {
      throw std::invalid_argument("segment lengths: total exceeds 2^61 budget");
    }
    sum += len;
    prefix_.push_back(sum);
  }
}

Partition::Partition(std::vector<int> breakpoints, int n) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 3) {
    throw std::invalid_argument("partition: needs at least two sides");
  }
  const int t = static_cast<int>(breakpoints_.size()) - 1;
  if (t % 2 != 0) {
    throw std::invalid_argument("partition: side count must be even, got " + std::to_string(t));
  }
  if (breakpoints_.front() != 0) {
    throw std::invalid_argument("partition: breakpoints must start at 0");
  }
  if (breakpoints_.back() != n) {
    throw std::invalid_argument("partition: breakpoints must end at n = " + std::to_string(n));
  }
  if (breakpoints_[0] > breakpoints_[1]) {
    throw std::invalid_argument("partition: breakpoints must be non-decreasing");
  }
  for (std::size_t j = 1; j + 1 < breakpoints_.size(); ++j) {
    if (breakpoints_[j] >= breakpoints_[j + 1]) {
      throw std::invalid_argument("partition: side " + std::to_string(j + 1) +
                                  " must hold at least one segment");
    }
  }
}

Partition Partition::normalized(std::vector<int> breakpoints, int n) {
  const int t = static_cast<int>(breakpoints.size()) - 1;
  if (t >= 1 && t % 2 != 0) {
    if (breakpoints.size() >= 2 && breakpoints[1] == 0) {
      breakpoints.erase(breakpoints.begin() + 1);  // drop the empty S_1
    } else {
      breakpoints.insert(breakpoints.begin() + 1, 0);  // prepend an empty S_1
    }
  }
  return Partition(std::move(breakpoints), n);
}

std::vector<Length> side_sums(const SegmentLengths& lengths, const Partition& p) {
  if (p.segment_count() != lengths.size()) {
    throw std::invalid_argument("partition built for n = " + std::to_string(p.segment_count()) +
                                ", instance has n = " + std::to_string(lengths.size()));
  }
  const auto& bps = p.breakpoints();
  std::vector<Length> sums;
  sums.reserve(bps.size() - 1);
  for (std::size_t j = 1; j < bps.size(); ++j) {
    sums.push_back(lengths.range_sum(bps[j - 1], bps[j]));
  }
  return sums;
}

namespace {

// Chain constraints s_j <= s_{j+2} plus the two rectangle bounds; returns
// the first violation as text, or empty when all hold.
std::string check_constraints(const std::vector<Length>& sums, Length h, Length w) {
  const int t = static_cast<int>(sums.size());
  for (int j = 0; j + 2 < t; ++j) {
    if (sums[j] > sums[j + 2]) {
      return "s" + std::to_string(j + 1) + " = " + std::to_string(sums[j]) + " > s" +
             std::to_string(j + 3) + " = " + std::to_string(sums[j + 2]);
    }
  }
  if (sums[t - 2] > h) {
    return "s" + std::to_string(t - 1) + " = " + std::to_string(sums[t - 2]) +
           " exceeds height " + std::to_string(h);
  }
  if (sums[t - 1] > w) {
    return "s" + std::to_string(t) + " = " + std::to_string(sums[t - 1]) + " exceeds width " +
           std::to_string(w);
  }
  return {};
}

}  // namespace

ValidationReport validate_wrapping(const SegmentLengths& lengths, const Partition& p,
                                   const RectangleBound& bound) {
  const std::vector<Length> sums = side_sums(lengths, p);
  std::string violation = check_constraints(sums, bound.height, bound.width);
  if (violation.empty()) {
    return {Validity::ValidAsGiven, {}};
  }
  if (bound.allow_rotate) {
    if (check_constraints(sums, bound.width, bound.height).empty()) {
      return {Validity::ValidRotated, {}};
    }
  }
  return {Validity::Invalid, std::move(violation)};
}

bool quick_infeasible(const SegmentLengths& lengths, const RectangleBound& bound) {
  const Length limit = std::max(bound.height, bound.width);
  for (Length len : lengths.lengths()) {
    if (len > limit) {
      return true;  // the segment's side sum would exceed both bounds
    }
  }
  // s_t >= 1 always, so w = 0 kills the as-given orientation; with rotation
  // the swapped check needs h >= 1.
  if (bound.width == 0 && (!bound.allow_rotate || bound.height == 0)) {
    return true;
  }
  return false;
}

std::vector<std::pair<Length, Length>> pareto_minimal(
    std::vector<std::pair<Length, Length>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<std::pair<Length, Length>> out;
  Length best_second = 0;
  for (const auto& p : pairs) {
    if (out.empty() || p.second < best_second) {
      out.push_back(p);
      best_second = p.second;
    }
  }
  return out;
}

}  // namespace rulerwrap
