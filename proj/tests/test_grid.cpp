#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gibbsgrid/grid.hpp"

using namespace gibbsgrid;

namespace {

std::shared_ptr<const SudokuPuzzle> sample_puzzle() {
  return std::make_shared<const SudokuPuzzle>(parse_sudoku(fixtures::kSamplePuzzle));
}

std::multiset<int> block_values(const Grid& g, const BlockLayout& layout, std::size_t b) {
  std::multiset<int> out;
  for (CellIndex c : layout.cells(b)) out.insert(g[c]);
  return out;
}

// Brute-force count of sudoku states: every assignment of 1..n to the free
// cells, kept when each block ends up a permutation of 1..n.
std::uint64_t enumerate_states(const SudokuPuzzle& p) {
  const int n = p.side();
  std::vector<CellIndex> free;
  for (CellIndex i = 0; i < static_cast<CellIndex>(n * n); ++i)
    if (!p.is_clue(i)) free.push_back(i);
  std::vector<int> cells(p.clues().begin(), p.clues().end());
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      for (std::size_t b = 0; b < p.layout().block_count(); ++b) {
        std::vector<int> vals;
        for (CellIndex c : p.layout().cells(b)) vals.push_back(cells[c]);
        if (!is_permutation_of_range(vals)) return;
      }
      ++count;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      cells[free[k]] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

} // namespace

TEST_CASE("block layouts partition the grid") {
  for (auto [n, h, w] : {std::tuple{9, 3, 3}, {4, 2, 2}, {10, 2, 5}, {8, 4, 4}, {6, 2, 3}, {1, 1, 1}}) {
    BlockLayout layout(n, h, w);
    std::vector<int> seen(static_cast<std::size_t>(n * n), 0);
    for (std::size_t b = 0; b < layout.block_count(); ++b) {
      CHECK(layout.cells(b).size() == static_cast<std::size_t>(h * w));
      for (CellIndex c : layout.cells(b)) {
        ++seen[c];
        CHECK(layout.block_of(c) == b);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
  CHECK_THROWS_AS(BlockLayout(9, 2, 3), ConstraintError);
}

TEST_CASE("block order round-trips") {
  BlockLayout layout(9, 3, 3);
  std::vector<int> v(81);
  for (int k = 0; k < 81; ++k) v[static_cast<std::size_t>(k)] = k;
  const auto blocked = layout.to_block_order(v);
  CHECK(blocked[0] == 0);
  CHECK(blocked[3] == 9);  // second row of block 1
  CHECK(blocked[9] == 3);  // first cell of block 2
  CHECK(layout.from_block_order(blocked) == v);
}

TEST_CASE("parse_sudoku") {
  SUBCASE("empty puzzle") {
    const auto p = parse_sudoku(std::string(81, '.'));
    CHECK(p.clue_count() == 0);
    for (std::size_t b = 0; b < 9; ++b) CHECK(p.free_cells(b).size() == 9);
  }
  SUBCASE("sample puzzle has 30 clues and the expected free counts") {
    const auto p = parse_sudoku(fixtures::kSamplePuzzle);
    CHECK(p.clue_count() == 30);
    const std::vector<std::size_t> expected{4, 5, 8, 6, 5, 6, 8, 5, 4};
    for (std::size_t b = 0; b < 9; ++b) CHECK(p.free_cells(b).size() == expected[b]);
    const auto missing = p.missing_values(0);
    CHECK(std::vector<int>(missing.begin(), missing.end()) == std::vector<int>{1, 2, 4, 7});
  }
  SUBCASE("whitespace and zeros") {
    std::string wrapped;
    for (int r = 0; r < 9; ++r) wrapped += fixtures::kSamplePuzzle.substr(static_cast<std::size_t>(r * 9), 9) + "\n";
    std::replace(wrapped.begin(), wrapped.end(), '.', '0');
    const auto p = parse_sudoku(wrapped);
    CHECK(p.clue_count() == 30);
  }
  SUBCASE("duplicate clue in a block") {
    CHECK_THROWS_AS(parse_sudoku("11" + std::string(79, '.')), ConstraintError);
  }
  SUBCASE("row conflicts outside a block are allowed") {
    CHECK_NOTHROW(parse_sudoku("1..1" + std::string(77, '.')));
  }
  SUBCASE("bad length and characters") {
    CHECK_THROWS_AS(parse_sudoku(std::string(80, '.')), ParseError);
    CHECK_THROWS_AS(parse_sudoku(std::string(82, '.')), ParseError);
    CHECK_THROWS_AS(parse_sudoku("x" + std::string(80, '.')), ParseError);
  }
  SUBCASE("4x4 layout") {
    const auto p = parse_sudoku("1...........4...", 2, 2);
    CHECK(p.side() == 4);
    CHECK(p.clue_count() == 2);
    CHECK_THROWS_AS(parse_sudoku("5...............", 2, 2), ConstraintError);
  }
}

TEST_CASE("serialize") {
  const Grid solved(9, fixtures::kSampleSolution);
  const auto text = serialize(solved);
  CHECK(text.rfind("5 3 4 6 7 8 9 1 2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
  CHECK(parse_grid(text) == solved);
  CHECK(serialize(Grid(1, {1})) == "1\n");
  CHECK_THROWS_AS(parse_grid("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("1 x\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_grid(""), ParseError);
}

TEST_CASE("serialize/parse round trip on random states") {
  Rng rng(7);
  const auto puzzle = sample_puzzle();
  for (int k = 0; k < 50; ++k) {
    const auto s = random_fill(puzzle, rng);
    CHECK(parse_grid(serialize(s)) == s.grid());
    const auto m = random_permutation(1 + static_cast<int>(rng.below(10)), rng);
    CHECK(parse_grid(serialize(m)) == m.grid());
  }
}

TEST_CASE("random_fill") {
  const auto puzzle = sample_puzzle();
  SUBCASE("fills missing values and keeps clues") {
    Rng rng(3);
    const auto s = random_fill(puzzle, rng);
    const auto& layout = puzzle->layout();
    for (std::size_t b = 0; b < 9; ++b)
      CHECK(block_values(s.grid(), layout, b) == std::multiset<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    std::multiset<int> block1_free;
    for (CellIndex c : puzzle->free_cells(0)) block1_free.insert(s.grid()[c]);
    CHECK(block1_free == std::multiset<int>{1, 2, 4, 7});
    for (CellIndex i = 0; i < 81; ++i)
      if (puzzle->is_clue(i)) CHECK(s.grid()[i] == puzzle->clue(i));
  }
  SUBCASE("deterministic under a fixed seed") {
    Rng a(11), b(11);
    CHECK(random_fill(puzzle, a) == random_fill(puzzle, b));
  }
  SUBCASE("fully clued puzzle has a unique state") {
    std::string text;
    for (int v : fixtures::kSampleSolution) text += static_cast<char>('0' + v);
    const auto full = std::make_shared<const SudokuPuzzle>(parse_sudoku(text));
    Rng rng(5);
    CHECK(random_fill(full, rng).grid() == Grid(9, fixtures::kSampleSolution));
  }
  SUBCASE("block shuffles are uniform") {
    // Block 1 has 4! = 24 orderings; chi-square against uniform over 24000 draws.
    Rng rng(99);
    std::map<std::vector<int>, int> freq;
    const int draws = 24000;
    for (int k = 0; k < draws; ++k) {
      const auto s = random_fill(puzzle, rng);
      std::vector<int> key;
      for (CellIndex c : puzzle->free_cells(0)) key.push_back(s.grid()[c]);
      ++freq[key];
    }
    CHECK(freq.size() == 24);
    double chi2 = 0;
    for (const auto& [key, f] : freq) chi2 += (f - 1000.0) * (f - 1000.0) / 1000.0;
    CHECK(chi2 < 50.0); // 23 dof; P(chi2 > 50) < 1e-3
  }
}

TEST_CASE("apply_swap") {
  const auto puzzle = sample_puzzle();
  Rng rng(1);
  const auto s = random_fill(puzzle, rng);
  const auto f = puzzle->free_cells(0);

  const auto once = apply_swap(s, f[0], f[1]);
  CHECK(once.grid()[f[0]] == s.grid()[f[1]]);
  CHECK(apply_swap(once, f[0], f[1]) == s);
  CHECK(block_values(once.grid(), puzzle->layout(), 0) == std::multiset<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});

  CHECK_THROWS_AS(apply_swap(s, 0, f[0]), ConstraintError); // cell 0 holds clue 5
  CHECK_THROWS_AS(apply_swap(s, f[0], f[0]), ConstraintError);
  CHECK_THROWS_AS(apply_swap(s, f[0], puzzle->free_cells(1)[0]), ConstraintError);

  const auto m = random_permutation(4, rng);
  CHECK(apply_swap(apply_swap(m, 0, 15), 0, 15) == m);
}

TEST_CASE("random legal swap sequences preserve the state invariant") {
  const auto puzzle = sample_puzzle();
  Rng rng(2024);
  auto s = random_fill(puzzle, rng);
  for (int k = 0; k < 2000; ++k) {
    const auto b = static_cast<std::size_t>(rng.below(9));
    const auto f = puzzle->free_cells(b);
    const auto a = static_cast<std::size_t>(rng.below(f.size()));
    auto c = static_cast<std::size_t>(rng.below(f.size() - 1));
    if (c >= a) ++c;
    s = apply_swap(s, f[a], f[c]); // GridState re-validates the invariant
  }
  for (std::size_t b = 0; b < 9; ++b)
    CHECK(block_values(s.grid(), puzzle->layout(), b) == std::multiset<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("GridState rejects broken invariants") {
  const auto puzzle = sample_puzzle();
  CHECK_THROWS_AS(GridState(Grid::filled(9, 1), puzzle), ConstraintError);
  CHECK_THROWS_AS(GridState(Grid(2, {1, 1, 2, 3})), ConstraintError);
  CHECK_NOTHROW(GridState(Grid(2, {4, 1, 2, 3})));
  CHECK_THROWS_AS(Grid(3, {1, 2}), ConstraintError);
}

TEST_CASE("count_states") {
  SUBCASE("first three sample blocks") {
    // 4! 5! 8!, from the free counts of blocks 1-3.
    const auto p = parse_sudoku(fixtures::kSamplePuzzle);
    BigInt first_band = 1;
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t k = 2; k <= p.free_cells(b).size(); ++k) first_band *= k;
    CHECK(first_band == 116121600);
  }
  SUBCASE("sample puzzle") {
    const auto c = count_states(parse_sudoku(fixtures::kSamplePuzzle));
    CHECK(c == BigInt("838826730171924480000000"));
    CHECK(to_scientific(c) == "8.388e23");
  }
  SUBCASE("fully clued and empty") {
    std::string text;
    for (int v : fixtures::kSampleSolution) text += static_cast<char>('0' + v);
    CHECK(count_states(parse_sudoku(text)) == 1);
    BigInt fact9 = 362880;
    BigInt expected = boost::multiprecision::pow(fact9, 9);
    CHECK(count_states(parse_sudoku(std::string(81, '.'))) == expected);
    CHECK(expected == BigInt("109110688415571316480344899355894085582848000000000"));
  }
  SUBCASE("matches brute-force enumeration on 4x4 puzzles") {
    // Blanked copies of the grid 1234/3412/2143/4321, at most 9 free cells.
    for (const char* text : {"1.3.3.1.2.4.4.2.", "12..34..21..43..", ".234341.2143432.",
                             "1234341221434321", "..3.3....1.3.3.1"}) {
      const auto p = parse_sudoku(text, 2, 2);
      CHECK(count_states(p) == enumerate_states(p));
    }
  }
}

TEST_CASE("to_scientific rounding") {
  CHECK(to_scientific(BigInt(1)) == "1.000e0");
  CHECK(to_scientific(BigInt(99995)) == "1.000e5");
  CHECK(to_scientific(BigInt(12344)) == "1.234e4");
  CHECK(to_scientific(BigInt(12345), 2) == "1.2e4");
  CHECK(to_scientific(BigInt(7), 1) == "7e0");
}
