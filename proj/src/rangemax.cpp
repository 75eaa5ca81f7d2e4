#include "rulerwrap/rangemax.hpp"

#include <algorithm>
#include <stdexcept>

namespace rulerwrap {

void LinearScanRangeMax::insert(Length x, Length y, Length z, std::uint32_t payload) {
  points_.push_back(Point{x, y, z, payload});
}

std::optional<RangeMaxIndex::Result> LinearScanRangeMax::query(Length x_max,
                                                               Length y_max) const {
  std::optional<Result> best;
  for (const Point& p : points_) {
    if (p.x <= x_max && p.y <= y_max && (!best || p.z > best->weight)) {
      best = Result{p.z, p.payload};
    }
  }
  return best;
}

IndexedRangeMax::IndexedRangeMax(std::vector<Length> y_candidates)
    : y_values_(std::move(y_candidates)) {
  std::sort(y_values_.begin(), y_values_.end());
  y_values_.erase(std::unique(y_values_.begin(), y_values_.end()), y_values_.end());
  cells_.resize(y_values_.size() + 1);
}

void IndexedRangeMax::staircase_insert(Staircase& s, Length x, Length z,
                                       std::uint32_t payload) {
  auto it = std::upper_bound(s.begin(), s.end(), x,
                             [](Length v, const Step& st) { return v < st.x; });
  if (it != s.begin()) {
    const Step& below = *(it - 1);
    if (below.z >= z) {
      return;  // dominated: smaller-or-equal x with at least this weight
    }
    if (below.x == x) {
      --it;  // same x, lower z: replaced below
    }
  }
  auto last = it;
  while (last != s.end() && last->z <= z) {
    ++last;  // entries with x' >= x and z' <= z are now dominated
  }
  it = s.erase(it, last);
  s.insert(it, Step{x, z, payload});
}

void IndexedRangeMax::insert(Length x, Length y, Length z, std::uint32_t payload) {
  auto pos = std::lower_bound(y_values_.begin(), y_values_.end(), y);
  if (pos == y_values_.end() || *pos != y) {
    throw std::invalid_argument("indexed range-max: y value not in the declared candidate set");
  }
  for (std::size_t r = static_cast<std::size_t>(pos - y_values_.begin()) + 1; r < cells_.size();
       r += r & (~r + 1)) {
    staircase_insert(cells_[r], x, z, payload);
  }
}

std::optional<RangeMaxIndex::Result> IndexedRangeMax::query(Length x_max, Length y_max) const {
  // Number of candidate y values <= y_max = BIT prefix length.
  std::size_t rank = static_cast<std::size_t>(
      std::upper_bound(y_values_.begin(), y_values_.end(), y_max) - y_values_.begin());
  std::optional<Result> best;
  for (std::size_t r = rank; r > 0; r -= r & (~r + 1)) {
    const Staircase& s = cells_[r];
    auto it = std::upper_bound(s.begin(), s.end(), x_max,
                               [](Length v, const Step& st) { return v < st.x; });
    if (it != s.begin()) {
      const Step& step = *(it - 1);
      if (!best || step.z > best->weight) {
        best = Result{step.z, step.payload};
      }
    }
  }
  return best;
}

}  // namespace rulerwrap
