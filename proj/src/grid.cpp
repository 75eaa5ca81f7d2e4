#include "rulerwrap/grid.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rulerwrap {

namespace {

std::unique_ptr<RangeMaxIndex> make_backend(const SegmentLengths& lengths,
                                            RangeMaxBackend backend) {
  if (backend == RangeMaxBackend::LinearScan) {
    return std::make_unique<LinearScanRangeMax>();
  }
  // Every y the pass inserts is a contiguous-run sum prefix(j) - prefix(i).
  const int n = lengths.size();
  std::vector<Length> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      candidates.push_back(lengths.range_sum(i, j));
    }
  }
  return std::make_unique<IndexedRangeMax>(std::move(candidates));
}

}  // namespace

GridSolver::GridSolver(const SegmentLengths& lengths, RangeMaxBackend backend)
    : lengths_(lengths) {
  const auto start = std::chrono::steady_clock::now();
  run(backend);
  stats_.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void GridSolver::run(RangeMaxBackend backend) {
  const int n = lengths_.size();
  std::unique_ptr<RangeMaxIndex> index = make_backend(lengths_, backend);

  struct PendingPoint {
    Length x, y, z;
    std::uint32_t payload;
  };
  std::vector<PendingPoint> pending;

  for (int i = 1; i <= n; ++i) {
    pending.clear();
    const Length prefix_i = lengths_.prefix(i);
    for (int ip = 1; ip < i; ++ip) {
      const Length prefix_ip = lengths_.prefix(ip);
      const Length last = prefix_i - prefix_ip;

      ++stats_.queries_issued;
      const auto hit = index->query(prefix_ip, last);

      // Empty-S_1 predecessors (empty, l_1..l_i'') are kept out of the grid;
      // the best one is the largest i'' < i' with prefix(i'') <= last.
      const auto prefix_begin = lengths_.prefixes().begin();
      const int empty_base_m = static_cast<int>(
          std::upper_bound(prefix_begin, prefix_begin + ip, last) - prefix_begin - 1);

      StoredWrapping w;
      w.m = i;
      w.last = last;
      if (hit && hit->weight > lengths_.prefix(empty_base_m)) {
        const StoredWrapping& pred = arena_[hit->payload];
        if (pred.m >= ip) {
          throw std::logic_error("grid: range-max returned a predecessor at or past the fold");
        }
        w.second_last = prefix_ip - hit->weight;
        w.back = StoredWrapping::Back::ExtendedFromStored;
        w.fold_at = ip;
        w.pred = static_cast<int>(hit->payload);
      } else if (empty_base_m >= 1) {
        w.second_last = prefix_ip - lengths_.prefix(empty_base_m);
        w.back = StoredWrapping::Back::ExtendedFromEmptyBase;
        w.fold_at = ip;
        w.pred = empty_base_m;
      } else {
        // Empty predecessor: the wrapping degenerates to the t=2 split at i'.
        w.second_last = prefix_ip;
        w.back = StoredWrapping::Back::BaseSplit;
        w.fold_at = ip;
      }

      const int idx = static_cast<int>(arena_.size());
      arena_.push_back(w);
      if (i == n) {
        final_derived_.push_back(idx);
      }
      pending.push_back(
          PendingPoint{prefix_i + w.second_last, last, prefix_i, static_cast<std::uint32_t>(idx)});
    }

    // Points for prefix i go in only after all step-i queries.
    for (const PendingPoint& p : pending) {
      ++stats_.points_inserted;
      index->insert(p.x, p.y, p.z, p.payload);
    }
    for (int b = 1; b < i; ++b) {
      StoredWrapping w;
      w.m = i;
      w.second_last = lengths_.prefix(b);
      w.last = prefix_i - lengths_.prefix(b);
      w.back = StoredWrapping::Back::BaseSplit;
      w.fold_at = b;
      const int idx = static_cast<int>(arena_.size());
      arena_.push_back(w);
      ++stats_.points_inserted;
      index->insert(prefix_i + w.second_last, w.last, prefix_i,
                    static_cast<std::uint32_t>(idx));
    }
  }
}

WrapWitness GridSolver::reconstruct(int arena_index, bool rotated) const {
  std::vector<int> rev;
  int cur = arena_index;
  rev.push_back(arena_[cur].m);
  while (true) {
    const StoredWrapping& w = arena_[cur];
    if (w.back == StoredWrapping::Back::BaseSplit) {
      rev.push_back(w.fold_at);
      rev.push_back(0);
      break;
    }
    rev.push_back(w.fold_at);
    if (w.back == StoredWrapping::Back::ExtendedFromEmptyBase) {
      rev.push_back(w.pred);
      rev.push_back(0);
      rev.push_back(0);
      break;
    }
    cur = w.pred;
    rev.push_back(arena_[cur].m);
  }
  std::reverse(rev.begin(), rev.end());
  Partition p(std::move(rev), lengths_.size());
  std::vector<Length> sums = side_sums(lengths_, p);
  return WrapWitness{std::move(p), std::move(sums), rotated};
}

WrapWitness GridSolver::reconstruct_base(int split, bool rotated) const {
  std::vector<int> bps = {0, split, lengths_.size()};
  if (split == 0) {
    bps = {0, 0, lengths_.size()};
  }
  Partition p(std::move(bps), lengths_.size());
  std::vector<Length> sums = side_sums(lengths_, p);
  return WrapWitness{std::move(p), std::move(sums), rotated};
}

SolveOutcome GridSolver::decide(const RectangleBound& bound) const {
  SolveOutcome outcome;
  outcome.stats = stats_;
  const int n = lengths_.size();
  const auto try_orientation = [&](Length h, Length w, bool rotated) -> bool {
    for (int b = 0; b < n; ++b) {
      if (lengths_.prefix(b) <= h && lengths_.prefix(n) - lengths_.prefix(b) <= w) {
        outcome.feasible = true;
        outcome.witness = reconstruct_base(b, rotated);
        return true;
      }
    }
    for (int idx : final_derived_) {
      const StoredWrapping& cand = arena_[static_cast<std::size_t>(idx)];
      if (cand.second_last <= h && cand.last <= w) {
        outcome.feasible = true;
        outcome.witness = reconstruct(idx, rotated);
        return true;
      }
    }
    return false;
  };
  if (!try_orientation(bound.height, bound.width, false) && bound.allow_rotate) {
    try_orientation(bound.width, bound.height, true);
  }
  return outcome;
}

std::vector<std::pair<Length, Length>> GridSolver::frontier() const {
  const int n = lengths_.size();
  std::vector<std::pair<Length, Length>> pairs;
  for (int b = 0; b < n; ++b) {
    pairs.emplace_back(lengths_.prefix(b), lengths_.prefix(n) - lengths_.prefix(b));
  }
  for (int idx : final_derived_) {
    const StoredWrapping& w = arena_[static_cast<std::size_t>(idx)];
    pairs.emplace_back(w.second_last, w.last);
  }
  return pareto_minimal(std::move(pairs));
}

SolveOutcome decide_grid(const SegmentLengths& lengths, const RectangleBound& bound,
                         RangeMaxBackend backend) {
  return GridSolver(lengths, backend).decide(bound);
}

std::vector<std::pair<Length, Length>> frontier_grid(const SegmentLengths& lengths,
                                                     RangeMaxBackend backend) {
  return GridSolver(lengths, backend).frontier();
}

}  // namespace rulerwrap
