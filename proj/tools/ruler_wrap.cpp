#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rulerwrap/core.hpp"
#include "rulerwrap/grid.hpp"
#include "rulerwrap/instance.hpp"
#include "rulerwrap/oracle.hpp"
#include "rulerwrap/quartic.hpp"
#include "rulerwrap/svg.hpp"

namespace {

using namespace rulerwrap;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerificationFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InstanceFormat resolve_format(const std::string& flag, std::string_view bytes) {
  if (flag == "json") return InstanceFormat::Json;
  if (flag == "text") return InstanceFormat::Text;
  // Sniff: a JSON instance starts with '{'.
  for (char c : bytes) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return c == '{' ? InstanceFormat::Json : InstanceFormat::Text;
    }
  }
  return InstanceFormat::Text;
}

InstanceFile load_instance(const std::string& path, const std::string& format_flag) {
  const std::string bytes = read_file(path);
  return parse_instance(bytes, resolve_format(format_flag, bytes));
}

SolveOutcome run_solver(const std::string& algorithm, const SegmentLengths& lengths,
                        const RectangleBound& bound) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome;
  if (algorithm == "brute") {
    OracleReport report = brute_force_decide(lengths, bound);
    outcome.feasible = report.feasible;
    outcome.witness = std::move(report.witness);
  } else if (algorithm == "quartic") {
    const WrapTable table = build_table(lengths);
    outcome = decide_quartic(table, lengths, bound);
  } else {
    outcome = decide_grid(lengths, bound);
  }
  outcome.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

std::vector<std::pair<Length, Length>> run_frontier(const std::string& algorithm,
                                                    const SegmentLengths& lengths) {
  if (algorithm == "brute") {
    return brute_force_decide(lengths, RectangleBound{0, 0, false}).frontier;
  }
  if (algorithm == "quartic") {
    return frontier_quartic(build_table(lengths));
  }
  return frontier_grid(lengths);
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> values;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      values.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError(std::string("bad ") + what + " value: \"" + token + "\"");
    }
  }
  if (values.empty()) {
    throw ParseError(std::string("empty ") + what + " list");
  }
  return values;
}

std::vector<std::string> parse_name_list(const std::string& csv) {
  std::vector<std::string> names;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token != "brute" && token != "quartic" && token != "grid") {
      throw ParseError("unknown algorithm: \"" + token + "\"");
    }
    names.push_back(token);
  }
  if (names.empty()) {
    throw ParseError("empty algorithm list");
  }
  return names;
}

int cmd_solve(const std::string& input, const std::string& format_flag,
              const std::string& algorithm, bool allow_rotate, const std::string& svg_path,
              bool emit_json) {
  const InstanceFile inst = load_instance(input, format_flag);
  const SegmentLengths lengths = inst.segments();
  const RectangleBound bound = inst.bound(allow_rotate);
  const SolveOutcome outcome = run_solver(algorithm, lengths, bound);

  if (outcome.feasible) {
    if (!outcome.witness ||
        !validate_wrapping(lengths, outcome.witness->partition, bound).ok()) {
      std::cerr << "internal error: solver witness failed validation\n";
      return kExitVerificationFailure;
    }
  }

  const ResultRecord record = make_result(algorithm, outcome);
  std::cout << (emit_json ? result_to_json(record) : result_to_human(record));

  if (!svg_path.empty() && outcome.witness) {
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) {
      throw ParseError("cannot open SVG output file: " + svg_path);
    }
    out << render_svg(*outcome.witness);
  }
  return outcome.feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_frontier(const std::string& input, const std::string& format_flag,
                 const std::string& algorithm) {
  const InstanceFile inst = load_instance(input, format_flag);
  const SegmentLengths lengths = inst.segments();
  for (const auto& [a, b] : run_frontier(algorithm, lengths)) {
    std::cout << a << " " << b << "\n";
  }
  return kExitFeasible;
}

int cmd_gen(int n, Length max_len, std::uint64_t seed, const std::string& format_flag) {
  const InstanceFile inst = generate_instance(n, max_len, seed);
  const InstanceFormat format =
      format_flag == "text" ? InstanceFormat::Text : InstanceFormat::Json;
  std::cout << serialize_instance(inst, format);
  return kExitFeasible;
}

int cmd_bench(const std::string& sizes_csv, int reps, const std::string& algorithms_csv,
              std::uint64_t seed, Length max_len) {
  const std::vector<int> sizes = parse_int_list(sizes_csv, "size");
  const std::vector<std::string> algorithms = parse_name_list(algorithms_csv);
  if (reps < 1) {
    throw ParseError("reps must be at least 1");
  }
  std::cout << "algorithm,n,rep,elapsed_ms,feasible,pairs,points,queries\n";
  for (const std::string& algorithm : algorithms) {
    for (int n : sizes) {
      bool warmed = false;
      for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t inst_seed = seed + 1000003ull * static_cast<std::uint64_t>(n) +
                                        static_cast<std::uint64_t>(rep);
        const InstanceFile inst = generate_instance(n, max_len, inst_seed);
        const SegmentLengths lengths = inst.segments();
        const RectangleBound bound = inst.bound(false);
        try {
          if (!warmed) {
            run_solver(algorithm, lengths, bound);
            warmed = true;
          }
          const SolveOutcome outcome = run_solver(algorithm, lengths, bound);
          std::cout << algorithm << "," << n << "," << rep << "," << outcome.stats.elapsed_ms
                    << "," << (outcome.feasible ? "true" : "false") << ","
                    << outcome.stats.pairs_stored << "," << outcome.stats.points_inserted << ","
                    << outcome.stats.queries_issued << "\n";
        } catch (const std::invalid_argument&) {
          std::cout << algorithm << "," << n << "," << rep << ",,error,,,\n";
        }
      }
    }
  }
  return kExitFeasible;
}

int cmd_verify(const std::string& input, const std::string& format_flag,
               const std::string& breakpoints_csv, bool allow_rotate) {
  const InstanceFile inst = load_instance(input, format_flag);
  const SegmentLengths lengths = inst.segments();
  const std::vector<int> bps = parse_int_list(breakpoints_csv, "breakpoint");
  Partition p(bps, lengths.size());  // structural errors surface as usage errors
  const ValidationReport report = validate_wrapping(lengths, p, inst.bound(allow_rotate));
  switch (report.verdict) {
    case Validity::ValidAsGiven:
      std::cout << "valid\n";
      return kExitFeasible;
    case Validity::ValidRotated:
      std::cout << "valid (rotated)\n";
      return kExitFeasible;
    case Validity::Invalid:
      std::cout << "invalid: " << report.violation << "\n";
      return kExitInfeasible;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectangular ruler wrapping solver"};
  app.require_subcommand(1);

  std::string input, format_flag = "auto", algorithm = "grid", svg_path, breakpoints_csv;
  std::string sizes_csv, algorithms_csv = "grid";
  bool allow_rotate = false, emit_json = false;
  int gen_n = 0, reps = 3;
  Length max_len = 8;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Decide whether the ruler wraps into the rectangle");
  solve->add_option("--input", input, "instance file")->required();
  solve->add_option("--format", format_flag, "json|text (default: sniff)");
  solve->add_option("--algorithm", algorithm, "grid|quartic|brute")
      ->check(CLI::IsMember({"grid", "quartic", "brute"}));
  solve->add_flag("--allow-rotate", allow_rotate, "also accept the rectangle rotated 90 degrees");
  solve->add_option("--svg", svg_path, "write the witness polyline as SVG");
  solve->add_flag("--json", emit_json, "emit the result record as JSON");

  auto* frontier = app.add_subcommand("frontier", "Enumerate Pareto-minimal feasible rectangles");
  frontier->add_option("--input", input, "instance file")->required();
  frontier->add_option("--format", format_flag, "json|text (default: sniff)");
  frontier->add_option("--algorithm", algorithm, "grid|quartic|brute")
      ->check(CLI::IsMember({"grid", "quartic", "brute"}));

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_n, "segment count")->required();
  gen->add_option("--max-len", max_len, "maximum segment length");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--format", format_flag, "json|text (default json)");

  auto* bench = app.add_subcommand("bench", "Benchmark solvers, CSV to stdout");
  bench->add_option("--sizes", sizes_csv, "comma-separated instance sizes")->required();
  bench->add_option("--reps", reps, "repetitions per size");
  bench->add_option("--algorithms", algorithms_csv, "comma-separated algorithm list");
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--max-len", max_len, "maximum segment length");

  auto* verify = app.add_subcommand("verify", "Validate a breakpoint sequence against an instance");
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--format", format_flag, "json|text (default: sniff)");
  verify->add_option("--breakpoints", breakpoints_csv, "comma-separated breakpoints")->required();
  verify->add_flag("--allow-rotate", allow_rotate, "also accept the rectangle rotated 90 degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(input, format_flag, algorithm, allow_rotate, svg_path, emit_json);
    }
    if (frontier->parsed()) {
      return cmd_frontier(input, format_flag, algorithm);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_n, max_len, seed, format_flag);
    }
    if (bench->parsed()) {
      return cmd_bench(sizes_csv, reps, algorithms_csv, seed, max_len);
    }
    if (verify->parsed()) {
      return cmd_verify(input, format_flag, breakpoints_csv, allow_rotate);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
