#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dropk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// naive engine cost guard
inline constexpr std::size_t kNaiveMaxLength = 20;
inline constexpr std::size_t kNaiveMaxK = 6;
// repeated gstep is O(kn); bench skips it above this length
inline constexpr std::size_t kGreedyBenchMaxLength = 100'000;
inline constexpr std::size_t kVerifyMaxLength = 9;
inline constexpr std::size_t kGameMaxLength = 7;
inline constexpr std::size_t kMonoAuxMaxTail = 6;

enum class Command { solve, verify, bench, trace };
enum class Algo { naive, greedy, linear };

struct RunConfig {
  Command command = Command::solve;
  std::size_t k = 0;
  Algo algo = Algo::linear;
  std::optional<std::string> input;
  std::optional<std::string> file;
  std::size_t max_len = 7;
  std::string alphabet = "123";
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 42;
};

struct BenchRecord {
  std::string algo;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t wall_nanos = 0;
  std::uint64_t steps = 0;
};

const char* algo_name(Algo a);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Benchmarks every engine permitted at each size on random digits with
/// k = n/2. Rows are ordered by size, then naive, greedy, linear.
std::vector<BenchRecord> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Parses arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dropk::cli
