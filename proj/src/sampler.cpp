#include "gibbsgrid/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace gibbsgrid {

double accept_probability(Energy delta_q, double lambda) {
  const double exponent = -lambda * static_cast<double>(delta_q);
  if (exponent >= 0.0) return 1.0;
  return std::exp(exponent);
}

// --- proposals -----------------------------------------------------------

ProposalKernel ProposalKernel::block_swap(const SudokuPuzzle& puzzle) {
  std::vector<std::vector<CellIndex>> groups;
  for (std::size_t b = 0; b < puzzle.layout().block_count(); ++b) {
    auto free = puzzle.free_cells(b);
    if (free.size() >= 2) groups.emplace_back(free.begin(), free.end());
  }
  return {Kind::block_swap, std::move(groups)};
}

ProposalKernel ProposalKernel::free_swap(int n) {
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (n < 1 || cells < 2) throw ConstraintError("free swap needs at least two cells");
  std::vector<CellIndex> all(cells);
  for (std::size_t k = 0; k < cells; ++k) all[k] = k;
  return {Kind::free_swap, {std::move(all)}};
}

std::pair<CellIndex, CellIndex> ProposalKernel::propose(Rng& rng) const {
  if (groups_.empty()) throw ConstraintError("no block has two free cells to swap");
  const auto& group = groups_.size() > 1 ? groups_[rng.below(groups_.size())] : groups_.front();
  const auto m = group.size();
  const auto a = rng.below(m);
  auto b = rng.below(m - 1);
  if (b >= a) ++b;
  return {group[a], group[b]};
}

// --- problems ------------------------------------------------------------

Problem Problem::sudoku(std::shared_ptr<const SudokuPuzzle> puzzle) {
  if (!puzzle) throw ConstraintError("null puzzle");
  auto kernel = ProposalKernel::block_swap(*puzzle);
  const int side = puzzle->side();
  return {std::move(puzzle), std::make_shared<SudokuEnergy>(), std::move(kernel), side};
}

Problem Problem::magic(MagicSpec spec) {
  const int side = spec.side();
  return {nullptr, std::make_shared<MagicEnergy>(std::move(spec)), ProposalKernel::free_swap(side),
          side};
}

const MagicSpec* Problem::magic_spec() const {
  const auto* m = dynamic_cast<const MagicEnergy*>(model_.get());
  return m ? &m->spec() : nullptr;
}

GridState Problem::initial_state(Rng& rng) const {
  return puzzle_ ? random_fill(puzzle_, rng) : random_permutation(side_, rng);
}

// --- chain ---------------------------------------------------------------

StepOutcome step(Grid& grid, Energy q, const EnergyModel& model, const ProposalKernel& kernel,
                 double lambda, Rng& rng) {
  const auto [i, j] = kernel.propose(rng);
  const Energy delta = model.delta_energy(grid, i, j);
  const double p = accept_probability(delta, lambda);
  if (p < 1.0 && !(rng.uniform01() < p)) return {false, q};
  grid.swap_cells(i, j);
  return {true, q + delta};
}

namespace {

constexpr std::size_t kNoChain = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kCancelPoll = 4096;

ChainResult run_chain_impl(const Problem& problem, const ChainConfig& config, std::size_t index,
                           std::atomic<std::size_t>* lowest_solver) {
  if (config.trace_every == 0) throw std::invalid_argument("trace_every must be at least 1");
  Rng rng(config.seed);
  Grid grid = problem.initial_state(rng).grid();
  const auto& model = problem.model();
  const auto& kernel = problem.kernel();
  const bool minimize = config.mode == Mode::minimize;
  const bool stop_on_hit = minimize && config.stop_on_hit;

  ChainResult res;
  res.seed = config.seed;
  Energy q = model.full_energy(grid);
  res.initial_q = q;
  res.best_q = q;
  res.best_state = grid;
  res.trace.push_back({0, q});

  auto record_hit = [&](std::uint64_t t) {
    ++res.hit_count;
    if (!res.first_hit) {
      res.first_hit = t;
      if (lowest_solver) {
        auto cur = lowest_solver->load();
        while (index < cur && !lowest_solver->compare_exchange_weak(cur, index)) {
        }
      }
    }
  };

  if (q == 0) record_hit(0);
  std::uint64_t t = 0;
  if (!(stop_on_hit && res.first_hit)) {
    while (t < config.iterations) {
      if (lowest_solver && t % kCancelPoll == 0 && lowest_solver->load() < index) {
        res.cancelled = true;
        break;
      }
      const double lambda = config.schedule.at(t);
      ++t;
      const auto out = step(grid, q, model, kernel, lambda, rng);
      q = out.q;
      if (out.accepted) ++res.accept_count;
      if (minimize ? q < res.best_q : q > res.best_q) {
        res.best_q = q;
        res.best_state = grid;
      }
      const bool hit = q == 0;
      if (hit || t % config.trace_every == 0) res.trace.push_back({t, q});
      if (hit) {
        record_hit(t);
        if (stop_on_hit) break;
      }
    }
  }
  res.iterations_used = t;
  res.final_state = std::move(grid);
  res.final_q = q;
  return res;
}

} // namespace

ChainResult run_chain(const Problem& problem, const ChainConfig& config) {
  return run_chain_impl(problem, config, 0, nullptr);
}

std::vector<ChainResult> run_chains(const Problem& problem, const ChainConfig& config,
                                    std::size_t count, bool race) {
  std::vector<ChainResult> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> lowest_solver{kNoChain};
  {
    std::vector<std::jthread> workers;
    workers.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      workers.emplace_back([&, k] {
        try {
          ChainConfig local = config;
          local.seed = config.seed + k;
          results[k] = run_chain_impl(problem, local, k, race ? &lowest_solver : nullptr);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, std::size_t discard) {
  out << "iter,Q\n";
  for (std::size_t k = discard; k < trace.size(); ++k) out << trace[k].iter << ',' << trace[k].q << '\n';
}

// --- exact oracle --------------------------------------------------------

std::map<std::vector<int>, double> enumerate_stationary(const SudokuPuzzle& puzzle, double lambda,
                                                        std::uint64_t max_states) {
  if (count_states(puzzle) > max_states)
    throw ConstraintError("state space too large to enumerate");

  const auto blocks = puzzle.layout().block_count();
  std::vector<int> cells(puzzle.clues().begin(), puzzle.clues().end());
  std::vector<std::pair<std::vector<int>, Energy>> states;

  // Depth-first over blocks; each block cycles through every ordering of its
  // missing values.
  auto visit = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks) {
      Grid g(puzzle.side(), cells);
      states.emplace_back(cells, sudoku_energy(g));
      return;
    }
    auto free = puzzle.free_cells(b);
    std::vector<int> perm(puzzle.missing_values(b).begin(), puzzle.missing_values(b).end());
    do {
      for (std::size_t k = 0; k < free.size(); ++k) cells[free[k]] = perm[k];
      self(self, b + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  visit(visit, 0);

  double shift = std::numeric_limits<double>::infinity();
  for (const auto& s : states) shift = std::min(shift, lambda * static_cast<double>(s.second));
  double k = 0.0;
  std::vector<double> weights;
  weights.reserve(states.size());
  for (const auto& s : states) {
    weights.push_back(std::exp(-(lambda * static_cast<double>(s.second) - shift)));
    k += weights.back();
  }
  std::map<std::vector<int>, double> table;
  for (std::size_t n = 0; n < states.size(); ++n) table.emplace(std::move(states[n].first), weights[n] / k);
  return table;
}

} // namespace gibbsgrid
