#pragma once

#include <optional>
#include <vector>

#include "symladder/ladder.hpp"

namespace symladder {

// A t-minor [rows; cols] of the symmetric matrix: det of the submatrix with
// entry (i,j) = x_{rows_i, cols_j}.  Both index tuples are strictly
// increasing and of equal length t >= 1; repeated indices would give the zero
// polynomial and are excluded.  On a symmetric matrix [rows;cols] and
// [cols;rows] are the same polynomial, so the canonical orientation keeps
// (rows, cols) <= (cols, rows) lexicographically.
struct Minor {
    std::vector<int> rows;
    std::vector<int> cols;

    int size() const { return static_cast<int>(rows.size()); }

    friend auto operator<=>(const Minor&, const Minor&) = default;
};

// Canonical orientation under transpose symmetry.
Minor canonical_minor(std::vector<int> rows, std::vector<int> cols);

// True iff every entry position (rows_i, cols_j) lies in the symmetric
// completion of the ladder.
bool minor_in_ladder(const Minor& minor, const Ladder& ladder);

// Symmetric mixed ladder determinantal ideal: distinguished points
// (v_1,w_1),...,(v_s,w_s) on the upper border of a ladder, with minor sizes
// t_1,...,t_s.  The ideal is the sum over k of the ideals of t_k-minors of
// the subladder at (v_k,w_k).  Invariants: points are canonical cells kept
// sorted with v ascending and w descending, every point is on the upper
// border, the point list covers all upper outside corners, and sizes are
// positive.  An empty point list denotes the zero ideal (the state reached
// when normalization eliminates every point); the ambient ladder is kept so
// the polynomial ring stays meaningful.
class MixedLadderIdeal {
  public:
    const Ladder& ladder() const { return ladder_; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<int>& sizes() const { return sizes_; }
    int s() const { return static_cast<int>(points_.size()); }

    friend bool operator==(const MixedLadderIdeal&, const MixedLadderIdeal&) = default;

  private:
    MixedLadderIdeal(Ladder ladder, std::vector<Point> points, std::vector<int> sizes)
        : ladder_(std::move(ladder)), points_(std::move(points)), sizes_(std::move(sizes)) {}

    Ladder ladder_;
    std::vector<Point> points_;
    std::vector<int> sizes_;

    friend MixedLadderIdeal mk_ideal(const Ladder&, std::vector<Point>, std::vector<int>);
};

// Validates and orders the distinguished data.  Mirror-form points (v > w)
// are canonicalized.  Throws LengthMismatch, NonPositiveSize,
// PointNotOnBorder, MissingUpperOutsideCorner.
MixedLadderIdeal mk_ideal(const Ladder& ladder, std::vector<Point> points, std::vector<int> sizes);

// Eliminates vacuous points (no minor of the requested size fits in the
// subladder) and redundant adjacent points (one subladder ideal contains the
// other), shrinking the ladder to the union of the surviving subladders.
// Total; the generated ideal is unchanged.  If every point is vacuous the
// result is the zero ideal on the original ladder.
MixedLadderIdeal normalize(const MixedLadderIdeal& ideal);

// True iff every point contributes a nonzero minor and the strict chain
// w_k - w_{k-1} < t_k - t_{k-1} < v_k - v_{k-1} holds for k = 2..s.
bool is_normalized(const MixedLadderIdeal& ideal);

// 1-based index k with t_k >= 2, v_k > v_{k-1} and w_k > w_{k+1} (sentinels
// v_0 = w_{s+1} = 0), maximizing t_k with minimal k as tie-break; nullopt
// iff every size is 1.  Throws NotNormalized.
std::optional<int> pivot(const MixedLadderIdeal& ideal);

// All canonical minors of the ideal's generating set: for each point k, the
// t_k-minors with rows <= v_k, cols <= w_k and every entry in the ladder;
// deduplicated across points and transpose symmetry, sorted.
std::vector<Minor> enumerate_generators(const MixedLadderIdeal& ideal);

// Cogenerated-ideal datum: strictly increasing row indices with
// 1 <= alpha_1 <= n and alpha_t <= n+1.
struct CogeneratedSpec {
    std::vector<int> alpha;
};

// Builds the cogenerated ideal: distinguished points are the upper outside
// corners plus, for each l with alpha_l >= 2, the unique upper-border cell in
// row alpha_l - 1 when that row meets the border in exactly one cell; the
// size at point (v,w) is min{ l : alpha_l > v }.  Result is normalized.
// Requires cell (1,n) in the ladder.  Throws PreconditionCornerMissing;
// AlphaOutOfRange when alpha is malformed or some size-min is empty.
MixedLadderIdeal from_cogenerated(const Ladder& ladder, const CogeneratedSpec& spec);

// Closed 1-based index interval.
struct IndexRange {
    int first = 0;
    int last = 0;

    friend auto operator<=>(const IndexRange&, const IndexRange&) = default;
};

// Embeds an m x n matrix X (m <= n) whose block S = X[sym_rows][sym_cols] is
// symmetric into a symmetric matrix of size m+n-|S|, where S lands on the
// diagonal; entry (a,b) of X maps to (a, m-|S|+b).  Returns the normalized
// ideal of t-minors of the image ladder (the rectangle rows 1..m, cols
// m-|S|+1 .. m+n-|S|).  S must be square and sit at the bottom-left of X
// (last row m, first column 1); throws MalformedBlocks otherwise.
MixedLadderIdeal embed_block_matrix(int m, int n, IndexRange sym_rows, IndexRange sym_cols,
                                    int t);

}  // namespace symladder
