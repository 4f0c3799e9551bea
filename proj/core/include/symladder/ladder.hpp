#pragma once

#include <optional>
#include <vector>

#include "symladder/cell.hpp"
#include "symladder/errors.hpp"

namespace symladder {

// Symmetric ladder region of an n x n grid, stored through its upper part
// L+ = { (i,j) in L : i <= j }. The full region is L+ together with the
// mirrored cells; L+ determines it completely.
class Ladder {
  public:
    int n() const { return n_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    // Membership in the full symmetric region: the query is canonicalized.
    bool contains(Cell c) const;

    // Column extent of row i within L+ (canonical cells only).
    std::optional<int> row_min(int i) const;
    std::optional<int> row_max(int i) const;

    // Rows with at least one canonical cell, ascending.
    std::vector<int> nonempty_rows() const;

    friend bool operator==(const Ladder&, const Ladder&) = default;

  private:
    friend Ladder validate_ladder(int n, const std::vector<Cell>& cells);
    Ladder(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {}

    int n_ = 0;
    std::vector<Cell> cells_;  // canonical, sorted, unique
};

// Corner description of a ladder. Inside corners (a_l,b_l) / (c_l,d_l)
// generate the region:
//   L+ = { (i,j) : i <= j, (i <= c_l or j <= d_l  for all l),
//                          (i >= a_l or j >= b_l  for all l) }
// with a strictly increasing, b strictly decreasing (likewise c, d).
// Outside corners are derived: (a_l, b_{l+1}) and (c_{l+1}, d_l), augmented
// by (a_u,a_u) when a_u != b_u and by (d_r,d_r) when c_r != d_r.
struct CornerData {
    std::vector<Cell> lower_inside;
    std::vector<Cell> lower_outside;
    std::vector<Cell> upper_inside;
    std::vector<Cell> upper_outside;

    friend bool operator==(const CornerData&, const CornerData&) = default;
};

// Canonicalizes the input cells and checks the region axioms.
// Throws OutOfRange, EmptyLadder, or ClosureViolation (with witness cells).
Ladder validate_ladder(int n, const std::vector<Cell>& cells);

// Builds the ladder generated by inside-corner lists. Empty lists impose no
// constraint. Throws MalformedCorners on ordering/range violations,
// EmptyLadder or ClosureViolation when the generated set is degenerate.
Ladder from_corners(int n, const std::vector<Cell>& lower_inside,
                    const std::vector<Cell>& upper_inside);

// Extracts corner lists that regenerate the ladder: from_corners on the
// result reproduces the same cell set for every corner-generated ladder.
CornerData corners(const Ladder& ladder);

// The staircase of cells along the upper-right boundary, ordered by
// increasing row then decreasing column. Contains every upper corner.
std::vector<Cell> upper_border(const Ladder& ladder);

// { (i,j) in L+ : i <= c, j <= d }. (c,d) must belong to the full region.
Ladder subladder_at(const Ladder& ladder, int c, int d);

}  // namespace symladder
