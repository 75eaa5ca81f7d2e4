#include "rulerwrap/quartic.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rulerwrap {

std::uint64_t WrapTable::entry_count() const {
  std::uint64_t total = 0;
  for (const auto& list : lists_) {
    total += list.size();
  }
  return total;
}

WrapTable build_table(const SegmentLengths& lengths, int max_segments) {
  const int n = lengths.size();
  if (n > max_segments) {
    throw std::invalid_argument("quartic: n = " + std::to_string(n) +
                                " exceeds the table memory ceiling of " +
                                std::to_string(max_segments));
  }
  std::vector<std::vector<PairEntry>> lists(static_cast<std::size_t>(n));
  std::vector<bool> seen;  // (a, b) membership for the list under construction
  for (int i = 1; i <= n; ++i) {
    auto& list = lists[static_cast<std::size_t>(i - 1)];
    seen.assign(static_cast<std::size_t>(i) * (i + 1) / 2, false);
    const auto mark = [&seen](int a, int b) -> bool {
      const std::size_t idx =
          static_cast<std::size_t>(b) * (b + 1) / 2 + static_cast<std::size_t>(a);
      if (seen[idx]) return false;
      seen[idx] = true;
      return true;
    };
    // Base t=2 splits: S_1 = l_1..l_b (empty at b = 0), S_2 = l_{b+1}..l_i.
    for (int b = 0; b < i; ++b) {
      mark(0, b);
      list.push_back(PairEntry{lengths.prefix(b), lengths.range_sum(b, i), 0, b});
    }
    // Extensions: fold after segment i', making l_{i'+1}..l_i the new last
    // side; requires the predecessor's second-to-last sum to fit under it.
    for (int ip = 1; ip < i; ++ip) {
      const Length new_side = lengths.range_sum(ip, i);
      const auto& source = lists[static_cast<std::size_t>(ip - 1)];
      for (int idx = 0; idx < static_cast<int>(source.size()); ++idx) {
        const PairEntry& e = source[idx];
        if (e.k1 <= new_side && mark(e.b, ip)) {
          list.push_back(PairEntry{e.k2, new_side, e.b, ip, ip, idx});
        }
      }
    }
  }
  return WrapTable(n, lengths.total(), std::move(lists));
}

namespace {

WrapWitness reconstruct(const WrapTable& table, const SegmentLengths& lengths,
                        const PairEntry& final_entry, bool rotated) {
  std::vector<int> rev;
  rev.push_back(table.size());
  const PairEntry* e = &final_entry;
  while (!e->is_base()) {
    rev.push_back(e->back_list);
    e = &table.list(e->back_list)[static_cast<std::size_t>(e->back_index)];
  }
  rev.push_back(e->b);
  rev.push_back(0);
  std::reverse(rev.begin(), rev.end());
  Partition p = Partition::normalized(std::move(rev), table.size());
  std::vector<Length> sums = side_sums(lengths, p);
  return WrapWitness{std::move(p), std::move(sums), rotated};
}

}  // namespace

SolveOutcome decide_quartic(const WrapTable& table, const SegmentLengths& lengths,
                            const RectangleBound& bound) {
  if (table.size() != lengths.size() || table.total() != lengths.total()) {
    throw std::invalid_argument("quartic: table was built for a different instance");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome;
  outcome.stats.pairs_stored = table.entry_count();
  const auto& final_list = table.list(table.size());
  for (const PairEntry& e : final_list) {
    if (e.k1 <= bound.height && e.k2 <= bound.width) {
      outcome.feasible = true;
      outcome.witness = reconstruct(table, lengths, e, false);
      break;
    }
  }
  if (!outcome.feasible && bound.allow_rotate) {
    for (const PairEntry& e : final_list) {
      if (e.k1 <= bound.width && e.k2 <= bound.height) {
        outcome.feasible = true;
        outcome.witness = reconstruct(table, lengths, e, true);
        break;
      }
    }
  }
  outcome.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

std::vector<std::pair<Length, Length>> frontier_quartic(const WrapTable& table) {
  std::vector<std::pair<Length, Length>> pairs;
  for (const PairEntry& e : table.list(table.size())) {
    pairs.emplace_back(e.k1, e.k2);
  }
  return pareto_minimal(std::move(pairs));
}

}  // namespace rulerwrap
