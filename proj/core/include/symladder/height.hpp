#pragma once

#include <vector>

#include "symladder/ideal.hpp"

namespace symladder {

// Combinatorial height datum: the region H+ whose cardinality is the height
// (codimension) of the ideal.  h_plus cells are canonical and sorted; H+
// together with its mirror is itself a valid ladder whose upper outside
// corners sit at (v_k - t_k + 1, w_k - t_k + 1).
struct HeightProfile {
    std::vector<Cell> h_plus;
    int height = 0;

    friend bool operator==(const HeightProfile&, const HeightProfile&) = default;
};

// H+ = { (i,j) in L+ : j <= w_1 - t_1 + 1, i <= v_s - t_s + 1, and for every
// k = 2..s, i <= v_{k-1} - t_{k-1} + 1 or j <= w_k - t_k + 1 }.  Requires a
// normalized ideal.  The zero ideal yields an empty profile.
HeightProfile h_plus(const MixedLadderIdeal& ideal);

// h_plus minus the single cell (v_k - t_k + 1, w_k - t_k + 1) of pivot k.
// Throws InvalidPivot unless 1 <= k <= s with t_k >= 2, v_k > v_{k-1} and
// w_k > w_{k+1} (sentinels 0); NotNormalized on unnormalized input.
HeightProfile i_plus(const MixedLadderIdeal& ideal, int k);

}  // namespace symladder
