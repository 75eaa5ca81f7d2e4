#include "rulerwrap/instance.hpp"

#include <cctype>
#include <charconv>
#include <random>
#include <sstream>

#include <json.hpp>

namespace rulerwrap {

namespace {

using nlohmann::json;

void check_budget(const std::vector<Length>& lengths, const std::string& where) {
  Length sum = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) {
      throw ParseError(where + ": length " + std::to_string(i + 1) + " must be positive, got " +
                       std::to_string(lengths[i]));
    }
    if (lengths[i] > kMaxTotalLength - sum) {
      throw ParseError(where + ": total length exceeds the 2^61 budget");
    }
    sum += lengths[i];
  }
}

Length json_nonneg(const json& obj, const char* field) {
  if (!obj.contains(field)) {
    throw ParseError(std::string("json instance: missing field \"") + field + "\"");
  }
  const json& v = obj.at(field);
  if (!v.is_number_integer() || v.get<Length>() < 0) {
    throw ParseError(std::string("json instance: field \"") + field +
                     "\" must be a non-negative integer");
  }
  return v.get<Length>();
}

InstanceFile parse_json(std::string_view bytes) {
  json obj;
  try {
    obj = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json instance: ") + e.what());
  }
  if (!obj.is_object()) {
    throw ParseError("json instance: top level must be an object");
  }
  InstanceFile inst;
  if (!obj.contains("lengths") || !obj.at("lengths").is_array()) {
    throw ParseError("json instance: field \"lengths\" must be an array");
  }
  for (const json& v : obj.at("lengths")) {
    if (!v.is_number_integer()) {
      throw ParseError("json instance: \"lengths\" entries must be integers");
    }
    inst.lengths.push_back(v.get<Length>());
  }
  if (inst.lengths.empty()) {
    throw ParseError("json instance: \"lengths\" must be nonempty");
  }
  check_budget(inst.lengths, "json instance");
  inst.height = json_nonneg(obj, "height");
  inst.width = json_nonneg(obj, "width");
  if (obj.contains("name")) {
    inst.name = obj.at("name").get<std::string>();
  }
  if (obj.contains("seed")) {
    inst.seed = obj.at("seed").get<std::uint64_t>();
  }
  return inst;
}

Length parse_int(std::string_view token, int line, const char* what, Length min_value) {
  Length value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("text instance, line " + std::to_string(line) + ": bad " + what + " \"" +
                     std::string(token) + "\"");
  }
  if (value < min_value) {
    throw ParseError("text instance, line " + std::to_string(line) + ": " + what +
                     " must be at least " + std::to_string(min_value));
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

InstanceFile parse_text(std::string_view bytes) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(bytes.substr(pos));
      break;
    }
    lines.push_back(bytes.substr(pos, nl - pos));
    pos = nl + 1;
  }
  std::vector<std::vector<std::string_view>> rows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tokens = split_ws(lines[i]);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.size() != 2) {
    throw ParseError("text instance: expected 2 nonempty lines (\"n h w\" then lengths), got " +
                     std::to_string(rows.size()));
  }
  if (rows[0].size() != 3) {
    throw ParseError("text instance, line 1: expected \"n h w\"");
  }
  InstanceFile inst;
  const Length n = parse_int(rows[0][0], 1, "segment count", 1);
  inst.height = parse_int(rows[0][1], 1, "height", 0);
  inst.width = parse_int(rows[0][2], 1, "width", 0);
  if (static_cast<Length>(rows[1].size()) != n) {
    throw ParseError("text instance, line 2: expected " + std::to_string(n) +
                     " lengths, got " + std::to_string(rows[1].size()));
  }
  for (const auto& token : rows[1]) {
    inst.lengths.push_back(parse_int(token, 2, "length", 1));
  }
  check_budget(inst.lengths, "text instance");
  return inst;
}

}  // namespace

InstanceFile parse_instance(std::string_view bytes, InstanceFormat format) {
  return format == InstanceFormat::Json ? parse_json(bytes) : parse_text(bytes);
}

std::string serialize_instance(const InstanceFile& instance, InstanceFormat format) {
  if (format == InstanceFormat::Json) {
    json obj;
    obj["lengths"] = instance.lengths;
    obj["height"] = instance.height;
    obj["width"] = instance.width;
    if (instance.name) obj["name"] = *instance.name;
    if (instance.seed) obj["seed"] = *instance.seed;
    return obj.dump(2) + "\n";
  }
  std::ostringstream out;
  out << instance.lengths.size() << " " << instance.height << " " << instance.width << "\n";
  for (std::size_t i = 0; i < instance.lengths.size(); ++i) {
    out << (i ? " " : "") << instance.lengths[i];
  }
  out << "\n";
  return out.str();
}

InstanceFile generate_instance(int n, Length max_len, std::uint64_t seed) {
  if (n < 1 || max_len < 1) {
    throw std::invalid_argument("generate_instance: need n >= 1 and max_len >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Length> len_dist(1, max_len);
  InstanceFile inst;
  inst.lengths.reserve(static_cast<std::size_t>(n));
  Length total = 0;
  for (int i = 0; i < n; ++i) {
    inst.lengths.push_back(len_dist(rng));
    total += inst.lengths.back();
  }
  // Jitter around a base split so instances straddle feasibility.
  std::uniform_int_distribution<Length> split_dist(0, n - 1);
  std::uniform_int_distribution<Length> jitter(-2, 2);
  Length prefix = 0;
  const Length split = split_dist(rng);
  for (Length i = 0; i < split; ++i) {
    prefix += inst.lengths[static_cast<std::size_t>(i)];
  }
  inst.height = std::max<Length>(0, prefix + jitter(rng));
  inst.width = std::max<Length>(0, total - prefix + jitter(rng));
  inst.seed = seed;
  inst.name = "gen-n" + std::to_string(n) + "-s" + std::to_string(seed);
  return inst;
}

ResultRecord make_result(const std::string& algorithm, const SolveOutcome& outcome) {
  ResultRecord record;
  record.feasible = outcome.feasible;
  record.algorithm = algorithm;
  record.stats = outcome.stats;
  if (outcome.witness) {
    record.rotated = outcome.witness->rotated;
    record.breakpoints = outcome.witness->partition.breakpoints();
    record.side_sums = outcome.witness->side_sums;
  }
  return record;
}

std::string result_to_json(const ResultRecord& record) {
  json obj;
  obj["feasible"] = record.feasible;
  obj["algorithm"] = record.algorithm;
  obj["rotated"] = record.rotated;
  if (record.feasible) {
    obj["breakpoints"] = record.breakpoints;
    obj["side_sums"] = record.side_sums;
  }
  obj["counters"] = {{"pairs", record.stats.pairs_stored},
                     {"points", record.stats.points_inserted},
                     {"queries", record.stats.queries_issued}};
  obj["elapsed_ms"] = record.stats.elapsed_ms;
  return obj.dump(2) + "\n";
}

std::string result_to_human(const ResultRecord& record) {
  std::ostringstream out;
  out << "algorithm: " << record.algorithm << "\n";
  out << "feasible: " << (record.feasible ? "yes" : "no") << "\n";
  if (record.feasible) {
    out << "rotated: " << (record.rotated ? "yes" : "no") << "\n";
    out << "breakpoints:";
    for (int b : record.breakpoints) out << " " << b;
    out << "\nside sums:";
    for (Length s : record.side_sums) out << " " << s;
    out << "\n";
  }
  out << "counters: pairs=" << record.stats.pairs_stored
      << " points=" << record.stats.points_inserted
      << " queries=" << record.stats.queries_issued << "\n";
  out << "elapsed: " << record.stats.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace rulerwrap
