// gibbsgrid: sudoku and magic-square search by Metropolis sampling from
// exp(-lambda Q(x)).

#include <iostream>

#include "CLI11.hpp"
#include "gibbsgrid/commands.hpp"

namespace {

void add_run_flags(CLI::App* cmd, gibbsgrid::cli::RunOptions& opts) {
  cmd->add_option("--lambda", opts.lambda, "Constant lambda");
  cmd->add_option("--ramp", opts.ramp, "Geometric ramp: lambda0,growth,max");
  cmd->add_option("--iters", opts.iterations, "Iteration budget per chain");
  cmd->add_option("--seed", opts.seed, "Seed; chain k uses seed + k");
  cmd->add_option("--chains", opts.chains, "Number of independent chains")->check(CLI::PositiveNumber);
  cmd->add_flag("--chains-race", opts.chains_race,
                "Stop chains once a lower-indexed chain has solved");
  cmd->add_option("--trace", opts.trace_path, "Write the Q trace as CSV (iter,Q)");
  cmd->add_option("--trace-every", opts.trace_every, "Trace stride")->check(CLI::PositiveNumber);
  cmd->add_option("--discard", opts.discard, "Omit the first N trace rows");
}

void add_block_flags(CLI::App* cmd, int& rows, int& cols) {
  cmd->add_option("--block-rows", rows, "Block height (default 3)");
  cmd->add_option("--block-cols", cols, "Block width (default 3)");
}

} // namespace

int main(int argc, char** argv) {
  namespace cli = gibbsgrid::cli;
  CLI::App app{"Sudoku solving and magic-square search with Metropolis chains"};
  app.require_subcommand(1);

  cli::RunOptions solve_opts;
  std::string solve_puzzle;
  auto* solve = app.add_subcommand("solve", "Solve a sudoku puzzle");
  solve->add_option("puzzle", solve_puzzle, "Puzzle file (81 characters, '.' or '0' blank)")->required();
  add_run_flags(solve, solve_opts);
  add_block_flags(solve, solve_opts.block_rows, solve_opts.block_cols);
  solve->add_flag("--run-full", solve_opts.run_full, "Keep sampling after the first hit");

  cli::RunOptions magic_opts;
  magic_opts.iterations = 20'000'000;
  std::string magic_variant = "classic-8";
  std::string magic_spec;
  auto* magic = app.add_subcommand("magic", "Find a magic square");
  auto* variant_opt = magic->add_option("--variant", magic_variant,
                                        "classic-8, five-block-8 or ten-block-10");
  magic->add_option("--spec", magic_spec, "Constraint file")->excludes(variant_opt);
  add_run_flags(magic, magic_opts);
  magic->add_flag("--run-full", magic_opts.run_full, "Keep sampling after the first hit");

  cli::RunOptions anti_opts;
  anti_opts.iterations = 100'000;
  std::string anti_puzzle;
  auto* anti = app.add_subcommand("anti", "Search for high-Q sudoku tables (negative lambda)");
  anti->add_option("puzzle", anti_puzzle, "Puzzle file")->required();
  add_run_flags(anti, anti_opts);
  add_block_flags(anti, anti_opts.block_rows, anti_opts.block_cols);

  std::string verify_grid, verify_family = "sudoku", verify_spec;
  auto* verify = app.add_subcommand("verify", "Check a grid against its constraints");
  verify->add_option("grid", verify_grid, "Grid file: n lines of n integers")->required();
  verify->add_option("--family", verify_family,
                     "sudoku, classic-8, five-block-8, ten-block-10 or spec");
  verify->add_option("--spec", verify_spec, "Constraint file for --family spec");

  std::string count_puzzle;
  int count_rows = 3, count_cols = 3;
  auto* count = app.add_subcommand("count", "Count the states of a puzzle's sample space");
  count->add_option("puzzle", count_puzzle, "Puzzle file")->required();
  add_block_flags(count, count_rows, count_cols);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  if (*solve) return cli::cmd_solve_sudoku(solve_puzzle, solve_opts, std::cout, std::cerr);
  if (*magic) {
    if (!magic_spec.empty()) magic_variant.clear();
    return cli::cmd_find_magic(magic_variant, magic_spec, magic_opts, std::cout, std::cerr);
  }
  if (*anti) return cli::cmd_anti_sudoku(anti_puzzle, anti_opts, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(verify_grid, verify_family, verify_spec, std::cout, std::cerr);
  return cli::cmd_count(count_puzzle, count_rows, count_cols, std::cout, std::cerr);
}
