#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rulerwrap/core.hpp"

namespace rulerwrap {

// Dominance range-max over weighted grid points: insert (x, y, z, payload)
// online, query the maximum z among points with x <= X and y <= Y.
// Insert-and-query only; no deletions.
class RangeMaxIndex {
 public:
  struct Result {
    Length weight = 0;
    std::uint32_t payload = 0;
  };

  virtual ~RangeMaxIndex() = default;
  virtual void insert(Length x, Length y, Length z, std::uint32_t payload) = 0;
  virtual std::optional<Result> query(Length x_max, Length y_max) const = 0;
};

// O(N)-per-query reference: a flat scan over every inserted point.
class LinearScanRangeMax final : public RangeMaxIndex {
 public:
  void insert(Length x, Length y, Length z, std::uint32_t payload) override;
  std::optional<Result> query(Length x_max, Length y_max) const override;

 private:
  struct Point {
    Length x, y, z;
    std::uint32_t payload;
  };
  std::vector<Point> points_;
};

// Indexed backend: a binary indexed tree over upfront-compressed y values,
// each cell holding a monotone (x ascending, z strictly ascending) staircase
// answering prefix-max-in-x.  Amortized O(log U * log N) per operation.
// Every inserted y must belong to the candidate set given at construction;
// query thresholds are unrestricted.
class IndexedRangeMax final : public RangeMaxIndex {
 public:
  explicit IndexedRangeMax(std::vector<Length> y_candidates);

  void insert(Length x, Length y, Length z, std::uint32_t payload) override;
  std::optional<Result> query(Length x_max, Length y_max) const override;

 private:
  struct Step {
    Length x, z;
    std::uint32_t payload;
  };
  using Staircase = std::vector<Step>;

  static void staircase_insert(Staircase& s, Length x, Length z, std::uint32_t payload);

  std::vector<Length> y_values_;   // sorted, unique
  std::vector<Staircase> cells_;   // 1-based BIT over y ranks
};

}  // namespace rulerwrap
