#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace symladder {

// A position (i,j) in the square grid, 1-based. Cells of a symmetric matrix
// come in mirror pairs; the canonical representative has i <= j.
struct Cell {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell canonical(Cell c) {
    if (c.i > c.j) return {c.j, c.i};
    return c;
}

inline bool is_canonical(Cell c) { return c.i <= c.j; }

using CellSet = std::set<Cell>;

// Distinguished point (v,w): an ordered pair of indices, not necessarily
// with v <= w. Link constructions produce points on either side of the
// diagonal, so order carries information here.
struct Point {
    int v = 0;
    int w = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Cell cell_of(Point p) { return {p.v, p.w}; }

}  // namespace symladder
