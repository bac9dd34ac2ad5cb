#pragma once

// Grids printed in the source material, used as exact fixtures.

#include <string>
#include <vector>

namespace gibbsgrid::fixtures {

inline const std::string kSamplePuzzle =
    "53..7....6..195....98....6.8...6...34..8.3..17...2...6.6....28....419..5....8..79";

// The puzzle's unique solution, row-major.
inline const std::vector<int> kSampleSolution = {
    5, 3, 4, 6, 7, 8, 9, 1, 2,
    6, 7, 2, 1, 9, 5, 3, 4, 8,
    1, 9, 8, 3, 4, 2, 5, 6, 7,
    8, 5, 9, 7, 6, 1, 4, 2, 3,
    4, 2, 6, 8, 5, 3, 7, 9, 1,
    7, 1, 3, 9, 2, 4, 8, 5, 6,
    9, 6, 1, 5, 3, 7, 2, 8, 4,
    2, 8, 7, 4, 1, 9, 6, 3, 5,
    3, 4, 5, 2, 8, 6, 1, 7, 9,
};

// High-Q table from a negative-lambda run, listed block by block (each block
// row-major), as printed.
inline const std::vector<int> kAntiTableBlockOrder = {
    5, 3, 1, 6, 4, 2, 7, 9, 8,
    2, 7, 6, 1, 9, 5, 4, 3, 8,
    1, 5, 2, 3, 9, 4, 8, 6, 7,
    8, 9, 3, 4, 6, 1, 7, 5, 2,
    7, 6, 9, 8, 1, 3, 4, 2, 5,
    7, 9, 3, 2, 8, 1, 4, 5, 6,
    8, 6, 1, 5, 3, 2, 7, 9, 4,
    3, 2, 6, 4, 1, 9, 5, 8, 7,
    2, 8, 3, 1, 6, 5, 4, 7, 9,
};

// Rows, columns, diagonals at 260 and the centred 4x4 block at 520.
inline const std::vector<int> kClassic8 = {
    39, 38, 13,  8, 27, 62, 47, 26,
    10, 54, 51, 53, 22, 19, 37, 14,
    36,  2, 12, 48, 61, 35, 20, 46,
    55, 30,  1, 18, 31, 57, 52, 16,
    56, 43, 29, 64, 15, 44,  5,  4,
    49, 40, 33, 34, 21, 17,  7, 59,
     6, 25, 63, 11, 42,  3, 60, 50,
     9, 28, 58, 24, 41, 23, 32, 45,
};

// Additionally the four 4x4 quadrants at 520.
inline const std::vector<int> kFiveBlock8 = {
    27, 50,  6, 48, 43, 39, 46,  1,
     3, 56, 60,  8, 14, 49, 61,  9,
    11, 28, 45, 53, 24, 40, 25, 34,
    35, 42,  7, 41, 16, 36, 19, 64,
    22, 17, 44, 26, 54, 13, 21, 63,
    59,  5, 33, 57, 29,  2, 37, 38,
    52, 32, 55, 12, 62, 23,  4, 20,
    51, 30, 10, 15, 18, 58, 47, 31,
};

// Rows, columns, diagonals and the ten 2x5 blocks all at 505.
inline const std::vector<int> kTenBlock10 = {
    36, 39, 48, 91, 64,  9, 49, 34, 52,  83,
    92, 17,  4, 42, 72, 94, 57, 28, 86,  13,
    88, 21, 85, 38, 51, 54, 61, 65, 32,  10,
    79, 73, 37, 18, 15, 90, 23, 87, 80,   3,
    19,  8, 63, 71, 99,  5, 40, 69, 31, 100,
    68, 35, 96, 45,  1, 84, 11, 25, 74,  66,
    33, 82, 44, 95, 67, 22, 53, 27, 12,  70,
     2, 55, 62, 59,  6, 47, 58, 43, 98,  75,
    81, 78, 46, 30, 41, 76, 60, 50, 14,  29,
     7, 97, 20, 16, 89, 24, 93, 77, 26,  56,
};

} // namespace gibbsgrid::fixtures
