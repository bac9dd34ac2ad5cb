#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gibbsgrid/grid.hpp"

namespace gibbsgrid {

/// Energies are exact integers; Q(x) >= 0 and Q(x) == 0 exactly on solutions.
using Energy = std::int64_t;

/// Score function Q over grids of one puzzle family.
class EnergyModel {
public:
  virtual ~EnergyModel() = default;

  virtual Energy full_energy(const Grid& grid) const = 0;

  /// Q(grid with cells i and j exchanged) - Q(grid). The base version
  /// recomputes both energies in full; derived models may override with an
  /// incremental evaluation that must agree exactly.
  virtual Energy delta_energy(const Grid& grid, CellIndex i, CellIndex j) const;
};

/// Reference delta by two full evaluations. Independent of any override.
Energy brute_force_delta(const EnergyModel& model, const Grid& grid, CellIndex i, CellIndex j);

// --- sudoku --------------------------------------------------------------

/// Sum over k of |sorted(line)_k - k| for a line of n values in [1, n].
/// Zero iff the line is a permutation of 1..n. Throws std::invalid_argument
/// on an empty line or out-of-range value.
Energy sudoku_row_score(std::span<const int> line);

/// Sum of sudoku_row_score over every row and every column.
Energy sudoku_energy(const Grid& grid);

class SudokuEnergy final : public EnergyModel {
public:
  Energy full_energy(const Grid& grid) const override { return sudoku_energy(grid); }
  /// Rescores only the rows and columns the two cells sit on.
  Energy delta_energy(const Grid& grid, CellIndex i, CellIndex j) const override;
};

// --- magic squares -------------------------------------------------------

/// n(n^2+1)/2, the common line sum of a normal n x n magic square.
Energy magic_constant(int n);

struct SumConstraint {
  std::string label;
  std::vector<CellIndex> cells;
  Energy target = 0;
};

/// Side length plus a list of (cell set, target sum) constraints.
class MagicSpec {
public:
  MagicSpec(int n, std::vector<SumConstraint> constraints);

  int side() const { return n_; }
  std::span<const SumConstraint> constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  /// Ascending ids of the constraints containing `cell`.
  std::span<const std::uint32_t> constraints_of(CellIndex cell) const { return by_cell_[cell]; }

private:
  int n_;
  std::vector<SumConstraint> constraints_;
  std::vector<std::vector<std::uint32_t>> by_cell_;
};

enum class MagicVariant { classic8, five_block8, ten_block10 };

/// Rows, columns, and both diagonals of an n x n grid, each at m.
std::vector<SumConstraint> line_constraints(int n);

/// Axis-aligned h x w block with 0-based top-left corner (row0, col0),
/// targeted at h*w*(n^2+1)/2 (i.e. (h*w/n)*m). Throws ConstraintError if the
/// block leaves the grid or the target is not an integer.
SumConstraint block_constraint(int n, int row0, int col0, int h, int w);

struct CustomMagicParams {
  int n = 0;
  int block_rows = 0;
  int block_cols = 0;
  std::vector<std::pair<int, int>> anchors; // 0-based top-left corners
};

/// classic-8: lines at 260 plus the centred 4x4 block at 520.
/// five-block-8: classic-8 plus the four 4x4 quadrants at 520.
/// ten-block-10: lines at 505 plus the ten 2x5 halves of the 2-row bands.
MagicSpec build_magic_spec(MagicVariant variant);
MagicSpec build_magic_spec(const CustomMagicParams& params);
/// Accepts "classic-8", "five-block-8", "ten-block-10". Throws ParseError.
MagicVariant parse_magic_variant(std::string_view name);

/// Sum over constraints of |cell sum - target|.
Energy magic_energy(const Grid& grid, const MagicSpec& spec);

class MagicEnergy final : public EnergyModel {
public:
  explicit MagicEnergy(MagicSpec spec) : spec_(std::move(spec)) {}
  const MagicSpec& spec() const { return spec_; }

  Energy full_energy(const Grid& grid) const override { return magic_energy(grid, spec_); }
  /// Rescores only constraints holding exactly one of the two cells.
  Energy delta_energy(const Grid& grid, CellIndex i, CellIndex j) const override;

private:
  MagicSpec spec_;
};

struct ConstraintResidual {
  std::string label;
  Energy sum = 0;
  Energy target = 0;
  Energy residual = 0; // sum - target
};

std::vector<ConstraintResidual> evaluate_constraints(const Grid& grid, const MagicSpec& spec);

/// Reads the constraint-file format:
///
///     # comment
///     n 8
///     rows = m
///     cols = m
///     diags = m
///     row 3 = 260
///     col 1 = m
///     diag main = m
///     diag anti = m
///     block 3 3 4 4 = 2m        (1-based row, col, then height, width)
///     cells 1,1 2,2 3,3 = 100   (1-based row,col pairs)
///
/// Targets are an integer, "m", or "<k>m" with m the magic constant.
/// Throws ParseError or ConstraintError.
MagicSpec parse_magic_spec(std::istream& in);
MagicSpec parse_magic_spec_text(std::string_view text);

} // namespace gibbsgrid
