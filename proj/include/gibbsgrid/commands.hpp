#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gibbsgrid/sampler.hpp"

namespace gibbsgrid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsolved = 1; // budget exhausted or verification failed
inline constexpr int kExitInputError = 2;

struct RunOptions {
  std::optional<double> lambda;
  std::optional<std::string> ramp; // "lambda0,growth,max"
  std::uint64_t iterations = 5'000'000;
  std::uint64_t seed = 1;
  std::size_t chains = 1;
  bool chains_race = false;
  std::optional<std::string> trace_path;
  std::uint64_t trace_every = 1000;
  bool run_full = false;
  std::size_t discard = 0;
  int block_rows = 3;
  int block_cols = 3;
};

/// Outcome of a solve/find/anti run, as printed on stdout.
struct RunReport {
  enum class Outcome { solved, budget_exhausted, maximized };

  Outcome outcome = Outcome::budget_exhausted;
  std::size_t chain = 0;
  ChainResult result;
  double wall_seconds = 0.0;
};

/// Builds the lambda schedule from --lambda / --ramp, falling back to a
/// constant `default_lambda`. Throws std::invalid_argument.
LambdaSchedule schedule_from(const RunOptions& opts, double default_lambda);

/// Picks the reported chain: the lowest-index solver, otherwise the
/// lowest-index chain with the best energy for the mode.
std::size_t select_chain(const std::vector<ChainResult>& results, Mode mode);

int cmd_solve_sudoku(const std::string& puzzle_path, const RunOptions& opts, std::ostream& out,
                     std::ostream& err);

/// Exactly one of `variant` ("classic-8", ...) or `spec_path` is non-empty.
int cmd_find_magic(const std::string& variant, const std::string& spec_path, const RunOptions& opts,
                   std::ostream& out, std::ostream& err);

int cmd_anti_sudoku(const std::string& puzzle_path, const RunOptions& opts, std::ostream& out,
                    std::ostream& err);

/// `family` is "sudoku", a magic variant name, or "spec" (with `spec_path`).
int cmd_verify(const std::string& grid_path, const std::string& family, const std::string& spec_path,
               std::ostream& out, std::ostream& err);

int cmd_count(const std::string& puzzle_path, int block_rows, int block_cols, std::ostream& out,
              std::ostream& err);

/// Prints one line per row, column, and block; true iff every row and column
/// scores zero and every block is a permutation of 1..n.
bool verify_sudoku_grid(const Grid& grid, int block_rows, int block_cols, std::ostream& out);

/// Prints sum, target, and residual for every constraint; true iff the grid is
/// a permutation of 1..n^2 and every residual is zero.
bool verify_magic_grid(const Grid& grid, const MagicSpec& spec, std::ostream& out);

/// Whole-file read. Throws ParseError when unreadable.
std::string read_file(const std::string& path);

} // namespace gibbsgrid::cli
