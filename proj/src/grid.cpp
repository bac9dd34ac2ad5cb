#include "gibbsgrid/grid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gibbsgrid {

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t k = v.size(); k > 1; --k) {
    const auto j = static_cast<std::size_t>(rng.below(k));
    std::swap(v[k - 1], v[j]);
  }
}

} // namespace

Grid::Grid(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1) throw ConstraintError("grid side must be positive");
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ConstraintError("grid of side " + std::to_string(n) + " needs " +
                          std::to_string(n * n) + " cells, got " + std::to_string(cells_.size()));
  for (int v : cells_)
    if (v < 1) throw ConstraintError("grid values must be positive");
}

Grid Grid::filled(int n, int fill) {
  return Grid(n, std::vector<int>(static_cast<std::size_t>(n * n), fill));
}

std::vector<int> Grid::row(int r) const {
  auto first = cells_.begin() + r * n_;
  return {first, first + n_};
}

std::vector<int> Grid::column(int c) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

Grid Grid::transposed() const {
  std::vector<int> out(cells_.size());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[static_cast<std::size_t>(c * n_ + r)] = at(r, c);
  return Grid(n_, std::move(out));
}

// --- BlockLayout ---------------------------------------------------------

BlockLayout::BlockLayout(int n, int block_rows, int block_cols)
    : n_(n), block_rows_(block_rows), block_cols_(block_cols) {
  if (n < 1 || block_rows < 1 || block_cols < 1)
    throw ConstraintError("block layout dimensions must be positive");
  if (n % block_rows != 0 || n % block_cols != 0)
    throw ConstraintError("blocks of " + std::to_string(block_rows) + "x" +
                          std::to_string(block_cols) + " do not tile a grid of side " +
                          std::to_string(n));
  const int bands = n / block_rows;
  const int stacks = n / block_cols;
  const auto cells = static_cast<std::size_t>(n * n);
  blocks_.resize(static_cast<std::size_t>(bands * stacks));
  block_of_.resize(cells);
  block_order_.reserve(cells);
  for (int br = 0; br < bands; ++br) {
    for (int bc = 0; bc < stacks; ++bc) {
      const auto b = static_cast<std::size_t>(br * stacks + bc);
      for (int r = br * block_rows; r < (br + 1) * block_rows; ++r) {
        for (int c = bc * block_cols; c < (bc + 1) * block_cols; ++c) {
          const auto cell = static_cast<CellIndex>(r * n + c);
          blocks_[b].push_back(cell);
          block_of_[cell] = b;
          block_order_.push_back(cell);
        }
      }
    }
  }
}

std::vector<int> BlockLayout::to_block_order(std::span<const int> row_major) const {
  if (row_major.size() != block_order_.size())
    throw ConstraintError("value count does not match layout");
  std::vector<int> out(row_major.size());
  for (std::size_t k = 0; k < block_order_.size(); ++k) out[k] = row_major[block_order_[k]];
  return out;
}

std::vector<int> BlockLayout::from_block_order(std::span<const int> block_major) const {
  if (block_major.size() != block_order_.size())
    throw ConstraintError("value count does not match layout");
  std::vector<int> out(block_major.size());
  for (std::size_t k = 0; k < block_order_.size(); ++k) out[block_order_[k]] = block_major[k];
  return out;
}

// --- SudokuPuzzle --------------------------------------------------------

SudokuPuzzle::SudokuPuzzle(BlockLayout layout, std::vector<int> clues)
    : layout_(std::move(layout)), clues_(std::move(clues)) {
  const int n = layout_.side();
  if (layout_.block_rows() * layout_.block_cols() != n)
    throw ConstraintError("sudoku blocks must hold exactly n cells");
  if (clues_.size() != static_cast<std::size_t>(n * n))
    throw ConstraintError("clue vector has wrong length");

  free_cells_.resize(layout_.block_count());
  missing_.resize(layout_.block_count());
  for (std::size_t b = 0; b < layout_.block_count(); ++b) {
    std::vector<bool> present(static_cast<std::size_t>(n + 1), false);
    for (CellIndex cell : layout_.cells(b)) {
      const int v = clues_[cell];
      if (v == 0) {
        free_cells_[b].push_back(cell);
        continue;
      }
      if (v < 0 || v > n)
        throw ConstraintError("clue value " + std::to_string(v) + " out of range");
      if (present[static_cast<std::size_t>(v)])
        throw ConstraintError("duplicate clue value " + std::to_string(v) + " in block " +
                              std::to_string(b + 1));
      present[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
      if (!present[static_cast<std::size_t>(v)]) missing_[b].push_back(v);
  }
}

std::size_t SudokuPuzzle::clue_count() const {
  return static_cast<std::size_t>(std::count_if(clues_.begin(), clues_.end(),
                                                [](int v) { return v != 0; }));
}

// --- GridState -----------------------------------------------------------

bool is_permutation_of_range(std::span<const int> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

GridState::GridState(Grid grid, std::shared_ptr<const SudokuPuzzle> puzzle)
    : grid_(std::move(grid)), puzzle_(std::move(puzzle)) {
  if (!puzzle_) {
    if (!is_permutation_of_range(grid_.values()))
      throw ConstraintError("grid is not a permutation of 1..n^2");
    return;
  }
  const auto& layout = puzzle_->layout();
  if (grid_.side() != layout.side()) throw ConstraintError("grid does not match puzzle size");
  for (CellIndex i = 0; i < grid_.size(); ++i)
    if (puzzle_->is_clue(i) && grid_[i] != puzzle_->clue(i))
      throw ConstraintError("clue cell " + std::to_string(i) + " was altered");
  for (std::size_t b = 0; b < layout.block_count(); ++b) {
    std::vector<int> vals;
    for (CellIndex cell : layout.cells(b)) vals.push_back(grid_[cell]);
    if (!is_permutation_of_range(vals))
      throw ConstraintError("block " + std::to_string(b + 1) + " is not a permutation of 1..n");
  }
}

GridState::GridState(Grid grid) : GridState(std::move(grid), nullptr) {}

// --- text formats --------------------------------------------------------

SudokuPuzzle parse_sudoku(std::string_view text) { return parse_sudoku(text, 3, 3); }

SudokuPuzzle parse_sudoku(std::string_view text, int block_rows, int block_cols) {
  const int n = block_rows * block_cols;
  if (n < 1 || n > 9) throw ParseError("character puzzle format supports n <= 9");
  std::vector<int> clues;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '.' || ch == '0') {
      clues.push_back(0);
    } else if (ch >= '1' && ch <= '9') {
      clues.push_back(ch - '0');
    } else {
      throw ParseError(std::string("invalid puzzle character '") + ch + "'");
    }
  }
  const auto expected = static_cast<std::size_t>(n * n);
  if (clues.size() != expected)
    throw ParseError("puzzle needs " + std::to_string(expected) + " cells, got " +
                     std::to_string(clues.size()));
  return SudokuPuzzle(BlockLayout(n, block_rows, block_cols), std::move(clues));
}

Grid parse_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid grid entry '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("invalid grid entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty grid");
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ParseError("grid is not square: expected " + std::to_string(n) + " entries per row");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  try {
    return Grid(n, std::move(cells));
  } catch (const ConstraintError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Grid& grid) {
  std::string out;
  const int n = grid.side();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(grid.at(r, c));
    }
    out += '\n';
  }
  return out;
}

// --- construction and moves ----------------------------------------------

GridState random_fill(std::shared_ptr<const SudokuPuzzle> puzzle, Rng& rng) {
  if (!puzzle) throw ConstraintError("random_fill needs a puzzle");
  const int n = puzzle->side();
  std::vector<int> cells(puzzle->clues().begin(), puzzle->clues().end());
  for (std::size_t b = 0; b < puzzle->layout().block_count(); ++b) {
    auto free = puzzle->free_cells(b);
    std::vector<int> values(puzzle->missing_values(b).begin(), puzzle->missing_values(b).end());
    if (values.size() != free.size()) throw ConstraintError("malformed puzzle block");
    shuffle(values, rng);
    for (std::size_t k = 0; k < free.size(); ++k) cells[free[k]] = values[k];
  }
  return GridState(Grid(n, std::move(cells)), std::move(puzzle));
}

GridState random_permutation(int n, Rng& rng) {
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  std::iota(cells.begin(), cells.end(), 1);
  shuffle(cells, rng);
  return GridState(Grid(n, std::move(cells)));
}

GridState apply_swap(const GridState& state, CellIndex i, CellIndex j) {
  const auto& g = state.grid();
  if (i >= g.size() || j >= g.size()) throw ConstraintError("swap cell out of range");
  if (i == j) throw ConstraintError("swap needs two distinct cells");
  if (const auto* p = state.puzzle()) {
    if (p->is_clue(i) || p->is_clue(j)) throw ConstraintError("cannot swap a clue cell");
    if (p->layout().block_of(i) != p->layout().block_of(j))
      throw ConstraintError("sudoku swaps must stay inside one block");
  }
  Grid next = g;
  next.swap_cells(i, j);
  return GridState(std::move(next), state.puzzle_ptr());
}

BigInt count_states(const SudokuPuzzle& puzzle) {
  BigInt total = 1;
  for (std::size_t b = 0; b < puzzle.layout().block_count(); ++b)
    for (std::size_t k = 2; k <= puzzle.free_cells(b).size(); ++k) total *= k;
  return total;
}

std::string to_scientific(const BigInt& value, int digits) {
  if (digits < 1) throw std::invalid_argument("to_scientific: digits must be positive");
  std::string s = value.str();
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  auto exponent = static_cast<long>(s.size()) - 1;
  std::string mant = s.substr(0, static_cast<std::size_t>(digits));
  mant.resize(static_cast<std::size_t>(digits), '0');
  // Round half up on the first dropped digit.
  if (s.size() > static_cast<std::size_t>(digits) && s[static_cast<std::size_t>(digits)] >= '5') {
    int k = digits - 1;
    while (k >= 0 && mant[static_cast<std::size_t>(k)] == '9') mant[static_cast<std::size_t>(k--)] = '0';
    if (k >= 0) {
      ++mant[static_cast<std::size_t>(k)];
    } else {
      mant.insert(mant.begin(), '1');
      mant.pop_back();
      ++exponent;
    }
  }
  std::string out = negative ? "-" : "";
  out += mant[0];
  if (digits > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(exponent);
}

} // namespace gibbsgrid
