#include "gibbsgrid/energy.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace gibbsgrid {

Energy EnergyModel::delta_energy(const Grid& grid, CellIndex i, CellIndex j) const {
  return brute_force_delta(*this, grid, i, j);
}

Energy brute_force_delta(const EnergyModel& model, const Grid& grid, CellIndex i, CellIndex j) {
  Grid after = grid;
  after.swap_cells(i, j);
  return model.full_energy(after) - model.full_energy(grid);
}

// --- sudoku --------------------------------------------------------------

namespace {

constexpr int kMaxLine = 64;

// Counting sort: the k-th smallest value is read off the histogram, so the
// score needs no comparison sort. Values are assumed validated.
template <class ValueAt>
Energy line_score(int n, ValueAt value_at) {
  std::array<int, kMaxLine + 1> counts{};
  for (int k = 0; k < n; ++k) ++counts[static_cast<std::size_t>(value_at(k))];
  Energy score = 0;
  int pos = 1;
  for (int v = 1; v <= n; ++v)
    for (int c = counts[static_cast<std::size_t>(v)]; c > 0; --c, ++pos) score += std::abs(v - pos);
  return score;
}

void check_sudoku_values(const Grid& grid) {
  const int n = grid.side();
  if (n > kMaxLine) throw std::invalid_argument("sudoku grid too large");
  for (int v : grid.values())
    if (v < 1 || v > n) throw std::invalid_argument("sudoku value out of range");
}

} // namespace

Energy sudoku_row_score(std::span<const int> line) {
  const auto n = static_cast<int>(line.size());
  if (n == 0 || n > kMaxLine) throw std::invalid_argument("sudoku line has invalid length");
  for (int v : line)
    if (v < 1 || v > n)
      throw std::invalid_argument("sudoku value " + std::to_string(v) + " outside [1," +
                                  std::to_string(n) + "]");
  return line_score(n, [&](int k) { return line[static_cast<std::size_t>(k)]; });
}

Energy sudoku_energy(const Grid& grid) {
  check_sudoku_values(grid);
  const int n = grid.side();
  Energy q = 0;
  for (int r = 0; r < n; ++r) q += line_score(n, [&](int c) { return grid.at(r, c); });
  for (int c = 0; c < n; ++c) q += line_score(n, [&](int r) { return grid.at(r, c); });
  return q;
}

Energy SudokuEnergy::delta_energy(const Grid& grid, CellIndex i, CellIndex j) const {
  const int n = grid.side();
  const auto ni = static_cast<CellIndex>(n);
  const int ri = static_cast<int>(i / ni), ci = static_cast<int>(i % ni);
  const int rj = static_cast<int>(j / ni), cj = static_cast<int>(j % ni);
  const int vi = grid[i], vj = grid[j];
  if (vi == vj) return 0;

  auto swapped = [&](int r, int c) {
    const auto cell = static_cast<CellIndex>(r * n + c);
    return cell == i ? vj : cell == j ? vi : grid.at(r, c);
  };
  Energy delta = 0;
  auto rescore_row = [&](int r) {
    delta += line_score(n, [&](int c) { return swapped(r, c); }) -
             line_score(n, [&](int c) { return grid.at(r, c); });
  };
  auto rescore_col = [&](int c) {
    delta += line_score(n, [&](int r) { return swapped(r, c); }) -
             line_score(n, [&](int r) { return grid.at(r, c); });
  };
  // A swap inside one row permutes that row and leaves its score unchanged.
  if (ri != rj) {
    rescore_row(ri);
    rescore_row(rj);
  }
  if (ci != cj) {
    rescore_col(ci);
    rescore_col(cj);
  }
  return delta;
}

// --- magic squares -------------------------------------------------------

Energy magic_constant(int n) {
  if (n < 1) throw std::invalid_argument("magic_constant: n must be positive");
  const Energy nn = n;
  return nn * (nn * nn + 1) / 2;
}

MagicSpec::MagicSpec(int n, std::vector<SumConstraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
  if (n < 1) throw ConstraintError("magic spec side must be positive");
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  by_cell_.resize(cells);
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    auto& c = constraints_[k];
    if (c.cells.empty()) throw ConstraintError("constraint '" + c.label + "' has no cells");
    std::sort(c.cells.begin(), c.cells.end());
    if (std::adjacent_find(c.cells.begin(), c.cells.end()) != c.cells.end())
      throw ConstraintError("constraint '" + c.label + "' repeats a cell");
    for (CellIndex cell : c.cells) {
      if (cell >= cells) throw ConstraintError("constraint '" + c.label + "' leaves the grid");
      by_cell_[cell].push_back(static_cast<std::uint32_t>(k));
    }
  }
}

std::vector<SumConstraint> line_constraints(int n) {
  const Energy m = magic_constant(n);
  std::vector<SumConstraint> out;
  for (int r = 0; r < n; ++r) {
    SumConstraint c{"row " + std::to_string(r + 1), {}, m};
    for (int col = 0; col < n; ++col) c.cells.push_back(static_cast<CellIndex>(r * n + col));
    out.push_back(std::move(c));
  }
  for (int col = 0; col < n; ++col) {
    SumConstraint c{"col " + std::to_string(col + 1), {}, m};
    for (int r = 0; r < n; ++r) c.cells.push_back(static_cast<CellIndex>(r * n + col));
    out.push_back(std::move(c));
  }
  SumConstraint main{"diag main", {}, m};
  SumConstraint anti{"diag anti", {}, m};
  for (int k = 0; k < n; ++k) {
    main.cells.push_back(static_cast<CellIndex>(k * n + k));
    anti.cells.push_back(static_cast<CellIndex>(k * n + (n - 1 - k)));
  }
  out.push_back(std::move(main));
  out.push_back(std::move(anti));
  return out;
}

SumConstraint block_constraint(int n, int row0, int col0, int h, int w) {
  if (h < 1 || w < 1 || row0 < 0 || col0 < 0 || row0 + h > n || col0 + w > n)
    throw ConstraintError("block out of bounds");
  const Energy twice = static_cast<Energy>(h) * w * (static_cast<Energy>(n) * n + 1);
  if (twice % 2 != 0) throw ConstraintError("block target is not an integer");
  SumConstraint c{"block " + std::to_string(row0 + 1) + " " + std::to_string(col0 + 1) + " " +
                      std::to_string(h) + " " + std::to_string(w),
                  {},
                  twice / 2};
  for (int r = row0; r < row0 + h; ++r)
    for (int col = col0; col < col0 + w; ++col) c.cells.push_back(static_cast<CellIndex>(r * n + col));
  return c;
}

MagicSpec build_magic_spec(MagicVariant variant) {
  switch (variant) {
  case MagicVariant::classic8:
    return build_magic_spec(CustomMagicParams{8, 4, 4, {{2, 2}}});
  case MagicVariant::five_block8:
    return build_magic_spec(CustomMagicParams{8, 4, 4, {{2, 2}, {0, 0}, {0, 4}, {4, 0}, {4, 4}}});
  case MagicVariant::ten_block10: {
    CustomMagicParams p{10, 2, 5, {}};
    for (int band = 0; band < 5; ++band) {
      p.anchors.emplace_back(2 * band, 0);
      p.anchors.emplace_back(2 * band, 5);
    }
    return build_magic_spec(p);
  }
  }
  throw std::invalid_argument("unknown magic variant");
}

MagicSpec build_magic_spec(const CustomMagicParams& params) {
  auto constraints = line_constraints(params.n);
  for (auto [r, c] : params.anchors)
    constraints.push_back(block_constraint(params.n, r, c, params.block_rows, params.block_cols));
  return MagicSpec(params.n, std::move(constraints));
}

MagicVariant parse_magic_variant(std::string_view name) {
  if (name == "classic-8") return MagicVariant::classic8;
  if (name == "five-block-8") return MagicVariant::five_block8;
  if (name == "ten-block-10") return MagicVariant::ten_block10;
  throw ParseError("unknown magic variant '" + std::string(name) + "'");
}

namespace {

void check_magic_grid(const Grid& grid, const MagicSpec& spec) {
  if (grid.side() != spec.side())
    throw std::invalid_argument("grid side " + std::to_string(grid.side()) +
                                " does not match spec side " + std::to_string(spec.side()));
}

Energy constraint_sum(const Grid& grid, const SumConstraint& c) {
  Energy s = 0;
  for (CellIndex cell : c.cells) s += grid[cell];
  return s;
}

} // namespace

Energy magic_energy(const Grid& grid, const MagicSpec& spec) {
  check_magic_grid(grid, spec);
  Energy q = 0;
  for (const auto& c : spec.constraints()) q += std::abs(constraint_sum(grid, c) - c.target);
  return q;
}

Energy MagicEnergy::delta_energy(const Grid& grid, CellIndex i, CellIndex j) const {
  const Energy shift = static_cast<Energy>(grid[j]) - grid[i]; // change at cell i
  if (shift == 0) return 0;
  auto in_i = spec_.constraints_of(i);
  auto in_j = spec_.constraints_of(j);
  const auto all = spec_.constraints();
  Energy delta = 0;
  auto rescore = [&](std::uint32_t k, Energy change) {
    const auto& c = all[k];
    const Energy before = constraint_sum(grid, c) - c.target;
    delta += std::abs(before + change) - std::abs(before);
  };
  // Both id lists are ascending; constraints holding both cells keep their sum.
  std::size_t a = 0, b = 0;
  while (a < in_i.size() || b < in_j.size()) {
    if (b == in_j.size() || (a < in_i.size() && in_i[a] < in_j[b])) {
      rescore(in_i[a++], shift);
    } else if (a == in_i.size() || in_j[b] < in_i[a]) {
      rescore(in_j[b++], -shift);
    } else {
      ++a;
      ++b;
    }
  }
  return delta;
}

std::vector<ConstraintResidual> evaluate_constraints(const Grid& grid, const MagicSpec& spec) {
  check_magic_grid(grid, spec);
  std::vector<ConstraintResidual> out;
  out.reserve(spec.size());
  for (const auto& c : spec.constraints()) {
    const Energy s = constraint_sum(grid, c);
    out.push_back({c.label, s, c.target, s - c.target});
  }
  return out;
}

} // namespace gibbsgrid
