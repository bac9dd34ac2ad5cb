#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gibbsgrid/energy.hpp"
#include "gibbsgrid/grid.hpp"
#include "gibbsgrid/rng.hpp"
#include "gibbsgrid/schedule.hpp"

namespace gibbsgrid {

/// min{1, exp(-lambda * delta_q)}. Only the energy difference enters; the
/// normalising constant of exp(-lambda Q) is never needed.
double accept_probability(Energy delta_q, double lambda);

/// Symmetric swap proposal.
///
/// block_swap: a block is drawn uniformly among blocks with at least two free
/// cells, then an unordered pair of its free cells uniformly.
/// free_swap: an unordered pair of distinct cells uniformly over the grid.
///
/// Random draws, in order: group index (only when there is more than one
/// group), first cell, second cell.
class ProposalKernel {
public:
  enum class Kind { block_swap, free_swap };

  static ProposalKernel block_swap(const SudokuPuzzle& puzzle);
  /// Throws ConstraintError when n * n < 2.
  static ProposalKernel free_swap(int n);

  Kind kind() const { return kind_; }
  std::size_t group_count() const { return groups_.size(); }

  /// Throws ConstraintError when there is no legal swap (every block has
  /// fewer than two free cells).
  std::pair<CellIndex, CellIndex> propose(Rng& rng) const;

private:
  ProposalKernel(Kind kind, std::vector<std::vector<CellIndex>> groups)
      : kind_(kind), groups_(std::move(groups)) {}

  Kind kind_;
  std::vector<std::vector<CellIndex>> groups_;
};

/// A puzzle family bound to its energy model, proposal kernel, and initialiser.
/// Immutable and shareable across threads.
class Problem {
public:
  static Problem sudoku(std::shared_ptr<const SudokuPuzzle> puzzle);
  static Problem magic(MagicSpec spec);

  /// random_fill for sudoku, a uniform permutation of 1..n^2 for magic squares.
  GridState initial_state(Rng& rng) const;

  const EnergyModel& model() const { return *model_; }
  const ProposalKernel& kernel() const { return kernel_; }
  const SudokuPuzzle* puzzle() const { return puzzle_.get(); }
  const MagicSpec* magic_spec() const;

private:
  Problem(std::shared_ptr<const SudokuPuzzle> puzzle, std::shared_ptr<const EnergyModel> model,
          ProposalKernel kernel, int side)
      : puzzle_(std::move(puzzle)), model_(std::move(model)), kernel_(std::move(kernel)), side_(side) {}

  std::shared_ptr<const SudokuPuzzle> puzzle_;
  std::shared_ptr<const EnergyModel> model_;
  ProposalKernel kernel_;
  int side_;
};

struct StepOutcome {
  bool accepted = false;
  Energy q = 0; // energy of the grid after the step
};

/// One Metropolis transition applied to `grid` in place. `q` must be the
/// current energy of `grid`. A uniform variate is drawn only when the
/// acceptance probability is below one. On rejection the grid is untouched.
StepOutcome step(Grid& grid, Energy q, const EnergyModel& model, const ProposalKernel& kernel,
                 double lambda, Rng& rng);

enum class Mode { minimize, maximize };

struct ChainConfig {
  std::uint64_t iterations = 1;
  LambdaSchedule schedule = LambdaSchedule::constant(1.0);
  std::uint64_t seed = 1;
  Mode mode = Mode::minimize;
  bool stop_on_hit = true; // ignored in maximize mode
  std::uint64_t trace_every = 1000;
};

struct TracePoint {
  std::uint64_t iter = 0;
  Energy q = 0;
  bool operator==(const TracePoint&) const = default;
};

struct ChainResult {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> first_hit;
  std::uint64_t hit_count = 0; // iterations (including 0) spent at Q = 0
  Grid best_state;
  Energy best_q = 0;
  Energy initial_q = 0;
  Grid final_state;
  Energy final_q = 0;
  std::vector<TracePoint> trace;
  std::uint64_t accept_count = 0;
  std::uint64_t iterations_used = 0;
  bool cancelled = false;

  bool solved() const { return first_hit.has_value(); }
  bool operator==(const ChainResult&) const = default;
};

/// Runs one chain from a random initial state (iteration 0) for up to
/// config.iterations steps. Step t uses lambda = schedule.at(t - 1). The
/// trace holds iteration 0, every trace_every-th iteration, and every
/// iteration at Q = 0. Deterministic in (problem, config).
ChainResult run_chain(const Problem& problem, const ChainConfig& config);

/// Runs `count` independent chains, chain k seeded config.seed + k, on worker
/// threads. Results come back in chain order. With `race`, chain k stops early
/// once some chain with a lower index has hit Q = 0; the lowest-index solver
/// and every chain before it are unaffected, so they stay deterministic.
std::vector<ChainResult> run_chains(const Problem& problem, const ChainConfig& config,
                                    std::size_t count, bool race = false);

/// CSV with header "iter,Q"; the first `discard` rows are omitted.
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace,
                     std::size_t discard = 0);

/// Exact exp(-lambda Q)/k over every state of a small sudoku puzzle, keyed by
/// the row-major grid. Throws ConstraintError above `max_states` states.
std::map<std::vector<int>, double> enumerate_stationary(const SudokuPuzzle& puzzle, double lambda,
                                                        std::uint64_t max_states = 100000);

} // namespace gibbsgrid
