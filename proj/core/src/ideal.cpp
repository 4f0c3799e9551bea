#include "symladder/ideal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "symladder/errors.hpp"

namespace symladder {

namespace {

Point canonical_point(Point p) {
    if (p.v > p.w) return {p.w, p.v};
    return p;
}

// Chain order of border cells: v ascending, then w descending.
bool point_before(const std::pair<Point, int>& a, const std::pair<Point, int>& b) {
    if (a.first.v != b.first.v) return a.first.v < b.first.v;
    return a.first.w > b.first.w;
}

// A size-t minor exists in the subladder at (v,w) iff the contiguous block
// [v-t+1 .. v] x [w-t+1 .. w] lies inside the region.
bool block_fits(const Ladder& ladder, Point p, int t) {
    if (p.v - t + 1 < 1 || p.w - t + 1 < 1) return false;
    for (int a = p.v - t + 1; a <= p.v; ++a)
        for (int b = p.w - t + 1; b <= p.w; ++b)
            if (!ladder.contains({a, b})) return false;
    return true;
}

Ladder shrink_to_union(const Ladder& ladder, const std::vector<std::pair<Point, int>>& pts) {
    std::vector<Cell> kept;
    for (Cell c : ladder.cells())
        if (std::any_of(pts.begin(), pts.end(), [&](const auto& e) {
                return c.i <= e.first.v && c.j <= e.first.w;
            }))
            kept.push_back(c);
    return validate_ladder(ladder.n(), kept);
}

}  // namespace

Minor canonical_minor(std::vector<int> rows, std::vector<int> cols) {
    if (cols < rows) rows.swap(cols);
    return {std::move(rows), std::move(cols)};
}

bool minor_in_ladder(const Minor& minor, const Ladder& ladder) {
    for (int r : minor.rows)
        for (int c : minor.cols)
            if (!ladder.contains({r, c})) return false;
    return true;
}

MixedLadderIdeal mk_ideal(const Ladder& ladder, std::vector<Point> points,
                          std::vector<int> sizes) {
    if (points.size() != sizes.size()) throw LengthMismatch(points.size(), sizes.size());
    for (int t : sizes)
        if (t < 1) throw NonPositiveSize(t);
    if (points.empty()) return MixedLadderIdeal(ladder, {}, {});

    std::vector<std::pair<Point, int>> pts;
    pts.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        pts.emplace_back(canonical_point(points[k]), sizes[k]);
    std::stable_sort(pts.begin(), pts.end(), point_before);

    const std::vector<Cell> border = upper_border(ladder);
    for (const auto& [p, t] : pts)
        if (std::find(border.begin(), border.end(), cell_of(p)) == border.end())
            throw PointNotOnBorder(p);
    for (Cell corner : corners(ladder).upper_outside)
        if (std::none_of(pts.begin(), pts.end(),
                         [&](const auto& e) { return cell_of(e.first) == corner; }))
            throw MissingUpperOutsideCorner(corner);

    points.clear();
    sizes.clear();
    for (auto& [p, t] : pts) {
        points.push_back(p);
        sizes.push_back(t);
    }
    return MixedLadderIdeal(ladder, std::move(points), std::move(sizes));
}

MixedLadderIdeal normalize(const MixedLadderIdeal& ideal) {
    const Ladder& original = ideal.ladder();
    std::vector<std::pair<Point, int>> pts;
    for (int k = 0; k < ideal.s(); ++k)
        pts.emplace_back(ideal.points()[k], ideal.sizes()[k]);

    // Vacuous points first. A surviving point's subladder is unchanged by any
    // later shrink (its own quadrant is always fully retained), so one sweep
    // settles this rule for good.
    std::erase_if(pts, [&](const auto& e) { return !block_fits(original, e.first, e.second); });
    if (pts.empty()) return mk_ideal(original, {}, {});

    // Redundant adjacent pairs to a fixpoint. dv <= dt makes part k a subset
    // of part k-1 (expand its minors along the first dv rows); dw >= dt is the
    // mirror statement and drops k-1.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 1; k < pts.size(); ++k) {
            const int dv = pts[k].first.v - pts[k - 1].first.v;
            const int dw = pts[k].first.w - pts[k - 1].first.w;
            const int dt = pts[k].second - pts[k - 1].second;
            if (dv <= dt) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k));
            } else if (dw >= dt) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k - 1));
            } else {
                continue;
            }
            changed = true;
            break;
        }
    }

    std::vector<Point> points;
    std::vector<int> sizes;
    for (auto& [p, t] : pts) {
        points.push_back(p);
        sizes.push_back(t);
    }
    return mk_ideal(shrink_to_union(original, pts), std::move(points), std::move(sizes));
}

bool is_normalized(const MixedLadderIdeal& ideal) {
    const auto& pts = ideal.points();
    const auto& t = ideal.sizes();
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (!block_fits(ideal.ladder(), pts[k], t[k])) return false;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const int dv = pts[k].v - pts[k - 1].v;
        const int dw = pts[k].w - pts[k - 1].w;
        const int dt = t[k] - t[k - 1];
        if (!(dw < dt && dt < dv)) return false;
    }
    return true;
}

std::optional<int> pivot(const MixedLadderIdeal& ideal) {
    if (!is_normalized(ideal)) throw NotNormalized();
    const auto& pts = ideal.points();
    const auto& t = ideal.sizes();
    const int s = ideal.s();
    int best = 0;
    for (int k = 1; k <= s; ++k) {
        if (t[k - 1] < 2) continue;
        const int v_prev = k >= 2 ? pts[k - 2].v : 0;
        const int w_next = k < s ? pts[k].w : 0;
        if (pts[k - 1].v > v_prev && pts[k - 1].w > w_next && (best == 0 || t[k - 1] > t[best - 1]))
            best = k;
    }
    if (best == 0) {
        if (std::all_of(t.begin(), t.end(), [](int x) { return x == 1; })) return std::nullopt;
        throw SymladderError("internal: normalized ideal with a size >= 2 but no valid pivot");
    }
    return best;
}

std::vector<Minor> enumerate_generators(const MixedLadderIdeal& ideal) {
    std::set<Minor> out;
    const Ladder& lad = ideal.ladder();
    for (int k = 0; k < ideal.s(); ++k) {
        const Point p = ideal.points()[k];
        const int t = ideal.sizes()[k];
        if (p.v - t + 1 < 1 || p.w - t + 1 < 1) continue;
        std::vector<int> rows(static_cast<std::size_t>(t));
        std::vector<int> cols(static_cast<std::size_t>(t));
        auto pick_cols = [&](auto&& self, int depth, int lo) -> void {
            if (depth == t) {
                out.insert(canonical_minor(rows, cols));
                return;
            }
            for (int c = lo; c <= p.w - (t - 1 - depth); ++c) {
                const bool ok = std::all_of(rows.begin(), rows.end(),
                                            [&](int r) { return lad.contains({r, c}); });
                if (!ok) continue;
                cols[static_cast<std::size_t>(depth)] = c;
                self(self, depth + 1, c + 1);
            }
        };
        auto pick_rows = [&](auto&& self, int depth, int lo) -> void {
            if (depth == t) {
                pick_cols(pick_cols, 0, 1);
                return;
            }
            for (int r = lo; r <= p.v - (t - 1 - depth); ++r) {
                rows[static_cast<std::size_t>(depth)] = r;
                self(self, depth + 1, r + 1);
            }
        };
        pick_rows(pick_rows, 0, 1);
    }
    return {out.begin(), out.end()};
}

MixedLadderIdeal from_cogenerated(const Ladder& ladder, const CogeneratedSpec& spec) {
    const int n = ladder.n();
    const auto& alpha = spec.alpha;
    if (alpha.empty()) throw AlphaOutOfRange("alpha is empty");
    for (std::size_t l = 1; l < alpha.size(); ++l)
        if (alpha[l] <= alpha[l - 1]) throw AlphaOutOfRange("alpha must be strictly increasing");
    if (alpha.front() < 1 || alpha.front() > n || alpha.back() > n + 1)
        throw AlphaOutOfRange("alpha must satisfy 1 <= alpha_1 <= n and alpha_t <= n+1");
    if (!ladder.contains({1, n})) throw PreconditionCornerMissing(n);

    const std::vector<Cell> border = upper_border(ladder);
    CellSet point_cells;
    for (Cell c : corners(ladder).upper_outside) point_cells.insert(c);
    for (int al : alpha) {
        const int row = al - 1;
        if (row < 1) continue;
        std::vector<Cell> in_row;
        for (Cell c : border)
            if (c.i == row) in_row.push_back(c);
        if (in_row.size() == 1) point_cells.insert(in_row.front());
    }

    std::vector<Point> points;
    std::vector<int> sizes;
    for (Cell c : point_cells) {
        points.push_back({c.i, c.j});
        const auto it = std::find_if(alpha.begin(), alpha.end(), [&](int a) { return a > c.i; });
        if (it == alpha.end())
            throw AlphaOutOfRange("no alpha entry exceeds point row " + std::to_string(c.i));
        sizes.push_back(static_cast<int>(it - alpha.begin()) + 1);
    }
    return normalize(mk_ideal(ladder, std::move(points), std::move(sizes)));
}

MixedLadderIdeal embed_block_matrix(int m, int n, IndexRange sym_rows, IndexRange sym_cols,
                                    int t) {
    if (m < 1 || n < 1 || m > n) throw MalformedBlocks("matrix shape must satisfy 1 <= m <= n");
    const int s = sym_rows.last - sym_rows.first + 1;
    if (s < 1 || sym_cols.last - sym_cols.first + 1 != s)
        throw MalformedBlocks("symmetric block must be a nonempty square");
    if (sym_rows.first < 1 || sym_rows.last > m || sym_cols.first < 1 || sym_cols.last > n)
        throw MalformedBlocks("block ranges fall outside the matrix");
    if (sym_rows.last != m || sym_cols.first != 1)
        throw MalformedBlocks("block must occupy the last rows and the first columns");
    if (t < 1) throw NonPositiveSize(t);

    const int big = m + n - s;
    std::vector<Cell> cells;
    for (int a = 1; a <= m; ++a)
        for (int b = m - s + 1; b <= big; ++b) cells.push_back(canonical({a, b}));
    Ladder image = validate_ladder(big, cells);

    std::vector<Point> points;
    for (Cell c : corners(image).upper_outside) points.push_back({c.i, c.j});
    const std::size_t count = points.size();
    return normalize(mk_ideal(image, std::move(points), std::vector<int>(count, t)));
}

}  // namespace symladder
