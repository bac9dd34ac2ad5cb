#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gibbsgrid/rng.hpp"

namespace gibbsgrid {

using CellIndex = std::size_t;
using BigInt = boost::multiprecision::cpp_int;

/// Malformed text input: bad length, bad character, bad number.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates a puzzle or state constraint.
class ConstraintError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Square matrix of positive integers stored row-major.
class Grid {
public:
  Grid() = default;
  Grid(int n, std::vector<int> cells);

  /// n x n grid with every cell set to `fill`.
  static Grid filled(int n, int fill);

  int side() const { return n_; }
  std::size_t size() const { return cells_.size(); }

  int operator[](CellIndex i) const { return cells_[i]; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * n_ + col)]; }
  void set(CellIndex i, int value) { cells_[i] = value; }

  std::span<const int> values() const { return cells_; }
  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;
  Grid transposed() const;

  /// Unchecked exchange of two cells.
  void swap_cells(CellIndex i, CellIndex j) { std::swap(cells_[i], cells_[j]); }

  bool operator==(const Grid&) const = default;

private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// Rectangular tiling of an n x n grid into block_rows x block_cols blocks.
///
/// Blocks are numbered row-major over the tiling; within a block, cells are
/// listed row-major. `block_order()` concatenates the blocks and is the
/// cached row-major <-> per-block index map.
class BlockLayout {
public:
  BlockLayout(int n, int block_rows, int block_cols);

  int side() const { return n_; }
  int block_rows() const { return block_rows_; }
  int block_cols() const { return block_cols_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::span<const CellIndex> cells(std::size_t block) const { return blocks_[block]; }
  std::size_t block_of(CellIndex cell) const { return block_of_[cell]; }

  std::span<const CellIndex> block_order() const { return block_order_; }

  /// Row-major values listed block by block.
  std::vector<int> to_block_order(std::span<const int> row_major) const;
  /// Inverse of to_block_order.
  std::vector<int> from_block_order(std::span<const int> block_major) const;

private:
  int n_;
  int block_rows_;
  int block_cols_;
  std::vector<std::vector<CellIndex>> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<CellIndex> block_order_;
};

/// Sudoku-family puzzle: n = block_rows * block_cols, values 1..n, each block
/// holding every value exactly once, clue cells fixed.
class SudokuPuzzle {
public:
  /// `clues` is row-major with 0 for a free cell. Throws ConstraintError when a
  /// clue is out of range or repeats a value inside its block.
  SudokuPuzzle(BlockLayout layout, std::vector<int> clues);

  int side() const { return layout_.side(); }
  const BlockLayout& layout() const { return layout_; }

  bool is_clue(CellIndex i) const { return clues_[i] != 0; }
  int clue(CellIndex i) const { return clues_[i]; }
  std::span<const int> clues() const { return clues_; }
  std::size_t clue_count() const;

  std::span<const CellIndex> free_cells(std::size_t block) const { return free_cells_[block]; }
  /// Values absent from the block's clues, ascending.
  std::span<const int> missing_values(std::size_t block) const { return missing_[block]; }

private:
  BlockLayout layout_;
  std::vector<int> clues_;
  std::vector<std::vector<CellIndex>> free_cells_;
  std::vector<std::vector<int>> missing_;
};

/// A grid together with the constraint set it is bound to: a sudoku puzzle
/// (block multisets plus clues) or, with no puzzle, a permutation of 1..n^2.
class GridState {
public:
  /// Validates the sudoku invariant. Throws ConstraintError.
  GridState(Grid grid, std::shared_ptr<const SudokuPuzzle> puzzle);
  /// Validates that the grid is a permutation of 1..n^2. Throws ConstraintError.
  explicit GridState(Grid grid);

  const Grid& grid() const { return grid_; }
  const SudokuPuzzle* puzzle() const { return puzzle_.get(); }
  const std::shared_ptr<const SudokuPuzzle>& puzzle_ptr() const { return puzzle_; }

  bool operator==(const GridState& other) const {
    return grid_ == other.grid_ && puzzle_ == other.puzzle_;
  }

private:
  Grid grid_;
  std::shared_ptr<const SudokuPuzzle> puzzle_;
};

/// 81 characters (whitespace ignored), '1'-'9' for clues, '0' or '.' blank.
SudokuPuzzle parse_sudoku(std::string_view text);
/// Same format for an arbitrary layout with n = block_rows * block_cols <= 9.
SudokuPuzzle parse_sudoku(std::string_view text, int block_rows, int block_cols);

/// n lines of n space-separated integers; n is taken from the line count.
Grid parse_grid(std::string_view text);

/// n lines of n space-separated integers, each newline-terminated.
std::string serialize(const Grid& grid);
inline std::string serialize(const GridState& state) { return serialize(state.grid()); }

/// Fills each block's free cells with a uniform shuffle of its missing values.
GridState random_fill(std::shared_ptr<const SudokuPuzzle> puzzle, Rng& rng);
/// Uniformly random permutation of 1..n^2.
GridState random_permutation(int n, Rng& rng);

/// Checked swap. Rejects i == j, out-of-range cells, and for sudoku states
/// clue cells and cross-block pairs.
GridState apply_swap(const GridState& state, CellIndex i, CellIndex j);

/// Product over blocks of (free cells)!, exact.
BigInt count_states(const SudokuPuzzle& puzzle);

/// Decimal scientific form with `digits` significant digits, e.g. "8.388e23".
std::string to_scientific(const BigInt& value, int digits = 4);

bool is_permutation_of_range(std::span<const int> values);

} // namespace gibbsgrid
