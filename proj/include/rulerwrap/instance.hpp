#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rulerwrap/core.hpp"

namespace rulerwrap {

enum class InstanceFormat { Json, Text };

struct InstanceFile {
  std::vector<Length> lengths;
  Length height = 0;
  Length width = 0;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;

  SegmentLengths segments() const { return SegmentLengths(lengths); }
  RectangleBound bound(bool allow_rotate = false) const {
    return RectangleBound{height, width, allow_rotate};
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: line 1 = "n h w", line 2 = n whitespace-separated positive
// integers.  JSON format: {"lengths": [...], "height": H, "width": W} with
// optional "name" and "seed".  Both enforce the 2^61 total-length budget.
InstanceFile parse_instance(std::string_view bytes, InstanceFormat format);
std::string serialize_instance(const InstanceFile& instance, InstanceFormat format);

// Deterministic seeded instance: lengths uniform in [1, max_len], bounds
// jittered around a random base split so feasibility is straddled.
InstanceFile generate_instance(int n, Length max_len, std::uint64_t seed);

struct ResultRecord {
  bool feasible = false;
  std::string algorithm;
  bool rotated = false;
  std::vector<int> breakpoints;   // present iff feasible
  std::vector<Length> side_sums;  // present iff feasible
  SolveStats stats;
};

ResultRecord make_result(const std::string& algorithm, const SolveOutcome& outcome);
std::string result_to_json(const ResultRecord& record);
std::string result_to_human(const ResultRecord& record);

}  // namespace rulerwrap
