#include "gibbsgrid/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace gibbsgrid::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LambdaSchedule schedule_from(const RunOptions& opts, double default_lambda) {
  if (opts.lambda && opts.ramp) throw std::invalid_argument("--lambda and --ramp are exclusive");
  if (opts.ramp) {
    std::istringstream ss(*opts.ramp);
    double parts[3];
    char sep1 = 0, sep2 = 0;
    if (!(ss >> parts[0] >> sep1 >> parts[1] >> sep2 >> parts[2]) || sep1 != ',' || sep2 != ',' ||
        !(ss >> std::ws).eof())
      throw std::invalid_argument("--ramp expects lambda0,growth,max");
    return LambdaSchedule::ramp(parts[0], parts[1], parts[2]);
  }
  return LambdaSchedule::constant(opts.lambda.value_or(default_lambda));
}

std::size_t select_chain(const std::vector<ChainResult>& results, Mode mode) {
  for (std::size_t k = 0; k < results.size(); ++k)
    if (mode == Mode::minimize && results[k].solved()) return k;
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    const bool better = mode == Mode::minimize ? results[k].best_q < results[best].best_q
                                               : results[k].best_q > results[best].best_q;
    if (better) best = k;
  }
  return best;
}

namespace {

const char* outcome_name(RunReport::Outcome o) {
  switch (o) {
  case RunReport::Outcome::solved: return "solved";
  case RunReport::Outcome::budget_exhausted: return "budget-exhausted";
  case RunReport::Outcome::maximized: return "maximized";
  }
  return "?";
}

void print_report(const RunReport& report, std::ostream& out) {
  const auto& r = report.result;
  out << "outcome: " << outcome_name(report.outcome) << '\n'
      << "chain: " << report.chain << '\n'
      << "seed: " << r.seed << '\n'
      << "iterations: " << r.iterations_used << '\n'
      << "first_hit: " << (r.first_hit ? std::to_string(*r.first_hit) : "none") << '\n'
      << "hit_count: " << r.hit_count << '\n'
      << "initial_q: " << r.initial_q << '\n'
      << "best_q: " << r.best_q << '\n'
      << "accepted: " << r.accept_count << '\n';
  out << (report.outcome == RunReport::Outcome::solved ? "solution:\n" : "best:\n")
      << serialize(r.best_state);
}

// Shared driver for the three sampling commands.
int run_and_report(const Problem& problem, const RunOptions& opts, Mode mode, double default_lambda,
                   std::ostream& out, std::ostream& err) {
  ChainConfig config;
  config.iterations = opts.iterations;
  config.schedule = schedule_from(opts, default_lambda);
  config.seed = opts.seed;
  config.mode = mode;
  config.stop_on_hit = !opts.run_full;
  config.trace_every = opts.trace_every;
  if (opts.chains < 1) throw std::invalid_argument("--chains must be at least 1");
  if (opts.trace_every < 1) throw std::invalid_argument("--trace-every must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  std::vector<ChainResult> results;
  if (opts.chains == 1)
    results.push_back(run_chain(problem, config));
  else
    results = run_chains(problem, config, opts.chains, opts.chains_race);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  RunReport report;
  report.chain = select_chain(results, mode);
  report.result = results[report.chain];
  report.wall_seconds = elapsed.count();
  if (mode == Mode::maximize)
    report.outcome = RunReport::Outcome::maximized;
  else
    report.outcome = report.result.solved() ? RunReport::Outcome::solved
                                            : RunReport::Outcome::budget_exhausted;

  if (results.size() > 1) {
    // Under --chains-race, chains after the reported one may have been cut
    // short at a timing-dependent point, so they are not listed.
    const std::size_t shown = opts.chains_race ? report.chain + 1 : results.size();
    for (std::size_t k = 0; k < shown; ++k) {
      const auto& r = results[k];
      out << "chain " << k << " seed " << r.seed << ": ";
      if (r.solved())
        out << "solved at " << *r.first_hit;
      else
        out << "best_q " << r.best_q;
      out << '\n';
    }
  }
  print_report(report, out);
  err << "wall_seconds: " << std::fixed << std::setprecision(3) << report.wall_seconds << '\n';

  if (opts.trace_path) {
    std::ofstream trace(*opts.trace_path);
    if (!trace) throw ParseError("cannot write trace '" + *opts.trace_path + "'");
    write_trace_csv(trace, report.result.trace, opts.discard);
  }
  if (report.outcome == RunReport::Outcome::budget_exhausted) return kExitUnsolved;
  return kExitOk;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

std::shared_ptr<const SudokuPuzzle> load_puzzle(const std::string& path, const RunOptions& opts) {
  return std::make_shared<const SudokuPuzzle>(
      parse_sudoku(read_file(path), opts.block_rows, opts.block_cols));
}

} // namespace

int cmd_solve_sudoku(const std::string& puzzle_path, const RunOptions& opts, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    auto puzzle = load_puzzle(puzzle_path, opts);
    return run_and_report(Problem::sudoku(std::move(puzzle)), opts, Mode::minimize, 1.0, out, err);
  });
}

int cmd_find_magic(const std::string& variant, const std::string& spec_path, const RunOptions& opts,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (variant.empty() == spec_path.empty())
      throw std::invalid_argument("give exactly one of a variant or a spec file");
    MagicSpec spec = variant.empty() ? parse_magic_spec_text(read_file(spec_path))
                                     : build_magic_spec(parse_magic_variant(variant));
    return run_and_report(Problem::magic(std::move(spec)), opts, Mode::minimize, 0.444, out, err);
  });
}

int cmd_anti_sudoku(const std::string& puzzle_path, const RunOptions& opts, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    auto puzzle = load_puzzle(puzzle_path, opts);
    return run_and_report(Problem::sudoku(std::move(puzzle)), opts, Mode::maximize, -1.0, out, err);
  });
}

bool verify_sudoku_grid(const Grid& grid, int block_rows, int block_cols, std::ostream& out) {
  const int n = grid.side();
  const BlockLayout layout(n, block_rows, block_cols);
  if (block_rows * block_cols != n) throw ConstraintError("blocks must hold n cells");
  for (int v : grid.values())
    if (v < 1 || v > n) throw ConstraintError("sudoku value " + std::to_string(v) + " out of range");

  int rows_ok = 0, cols_ok = 0, blocks_ok = 0;
  for (int r = 0; r < n; ++r) {
    const Energy s = sudoku_row_score(grid.row(r));
    rows_ok += s == 0;
    out << "row " << r + 1 << ": score " << s << (s == 0 ? " ok" : " FAIL") << '\n';
  }
  for (int c = 0; c < n; ++c) {
    const Energy s = sudoku_row_score(grid.column(c));
    cols_ok += s == 0;
    out << "col " << c + 1 << ": score " << s << (s == 0 ? " ok" : " FAIL") << '\n';
  }
  for (std::size_t b = 0; b < layout.block_count(); ++b) {
    std::vector<int> vals;
    for (CellIndex cell : layout.cells(b)) vals.push_back(grid[cell]);
    const bool ok = is_permutation_of_range(vals);
    blocks_ok += ok;
    out << "block " << b + 1 << ": " << (ok ? "permutation ok" : "not a permutation FAIL") << '\n';
  }
  out << "rows ok: " << rows_ok << '/' << n << '\n'
      << "cols ok: " << cols_ok << '/' << n << '\n'
      << "blocks ok: " << blocks_ok << '/' << layout.block_count() << '\n'
      << "Q: " << sudoku_energy(grid) << '\n';
  const bool all = rows_ok == n && cols_ok == n && blocks_ok == static_cast<int>(layout.block_count());
  out << (all ? "verified\n" : "not verified\n");
  return all;
}

bool verify_magic_grid(const Grid& grid, const MagicSpec& spec, std::ostream& out) {
  const auto cells = grid.size();
  for (int v : grid.values())
    if (v < 1 || static_cast<std::size_t>(v) > cells)
      throw ConstraintError("value " + std::to_string(v) + " outside 1..n^2");
  const bool perm = is_permutation_of_range(grid.values());
  out << "values: " << (perm ? "permutation of 1..n^2 ok" : "repeated values FAIL") << '\n';
  std::size_t ok = 0;
  const auto residuals = evaluate_constraints(grid, spec);
  for (const auto& r : residuals) {
    ok += r.residual == 0;
    out << r.label << ": sum " << r.sum << " target " << r.target << " residual " << r.residual
        << (r.residual == 0 ? " ok" : " FAIL") << '\n';
  }
  out << "constraints ok: " << ok << '/' << residuals.size() << '\n';
  const bool all = perm && ok == residuals.size();
  out << (all ? "verified\n" : "not verified\n");
  return all;
}

int cmd_verify(const std::string& grid_path, const std::string& family, const std::string& spec_path,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Grid grid = parse_grid(read_file(grid_path));
    bool ok = false;
    if (family == "sudoku") {
      const int b = static_cast<int>(std::lround(std::sqrt(grid.side())));
      if (b * b != grid.side()) throw ConstraintError("sudoku grid side must be a perfect square");
      ok = verify_sudoku_grid(grid, b, b, out);
    } else if (family == "spec") {
      if (spec_path.empty()) throw std::invalid_argument("--spec is required for family 'spec'");
      ok = verify_magic_grid(grid, parse_magic_spec_text(read_file(spec_path)), out);
    } else {
      ok = verify_magic_grid(grid, build_magic_spec(parse_magic_variant(family)), out);
    }
    return ok ? kExitOk : kExitUnsolved;
  });
}

int cmd_count(const std::string& puzzle_path, int block_rows, int block_cols, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto puzzle = parse_sudoku(read_file(puzzle_path), block_rows, block_cols);
    out << "clues: " << puzzle.clue_count() << '\n' << "free per block:";
    for (std::size_t b = 0; b < puzzle.layout().block_count(); ++b)
      out << ' ' << puzzle.free_cells(b).size();
    const BigInt count = count_states(puzzle);
    out << '\n' << "states: " << count.str() << '\n' << "approx: " << to_scientific(count, 4) << '\n';
    return kExitOk;
  });
}

} // namespace gibbsgrid::cli
