#include "symladder/ladder.hpp"

#include <algorithm>
#include <map>

namespace symladder {

namespace {

// Row profile: min/max canonical column per nonempty row, ascending rows.
struct Profile {
    std::vector<int> rows;
    std::map<int, int> lo, hi;
};

Profile profile_of(const Ladder& lad) {
    Profile p;
    for (const Cell& c : lad.cells()) {
        auto [it, fresh] = p.hi.try_emplace(c.i, c.j);
        if (!fresh) it->second = std::max(it->second, c.j);
        auto [jt, fresh2] = p.lo.try_emplace(c.i, c.j);
        if (!fresh2) jt->second = std::min(jt->second, c.j);
    }
    for (const auto& [row, _] : p.hi) p.rows.push_back(row);
    return p;
}

bool monotone_corner_list(const std::vector<Cell>& cs) {
    for (std::size_t l = 1; l < cs.size(); ++l)
        if (cs[l].i <= cs[l - 1].i || cs[l].j >= cs[l - 1].j) return false;
    return true;
}

}  // namespace

bool Ladder::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), canonical(c));
}

std::optional<int> Ladder::row_min(int i) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{i, 0});
    if (it == cells_.end() || it->i != i) return std::nullopt;
    return it->j;
}

std::optional<int> Ladder::row_max(int i) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{i + 1, 0});
    if (it == cells_.begin() || std::prev(it)->i != i) return std::nullopt;
    return std::prev(it)->j;
}

std::vector<int> Ladder::nonempty_rows() const {
    std::vector<int> rows;
    for (const Cell& c : cells_)
        if (rows.empty() || rows.back() != c.i) rows.push_back(c.i);
    return rows;
}

Ladder validate_ladder(int n, const std::vector<Cell>& cells) {
    std::vector<Cell> canon;
    canon.reserve(cells.size());
    for (Cell c : cells) {
        if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) throw OutOfRange(c, n);
        canon.push_back(canonical(c));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    if (canon.empty()) throw EmptyLadder();

    // Region axiom: cells (i,j),(h,k) with i<h and j>k force (i,k).
    // Quadratic scan; regions at this scale are small.
    Ladder lad(n, std::move(canon));
    for (const Cell& a : lad.cells())
        for (const Cell& b : lad.cells())
            if (a.i < b.i && a.j > b.j && !lad.contains({a.i, b.j}))
                throw ClosureViolation(a, b, {a.i, b.j});
    return lad;
}

Ladder from_corners(int n, const std::vector<Cell>& lower_inside,
                    const std::vector<Cell>& upper_inside) {
    if (n < 1) throw MalformedCorners("ambient size must be positive");
    for (const auto* list : {&lower_inside, &upper_inside}) {
        for (Cell c : *list)
            if (c.i < 1 || c.i > n || c.j < 1 || c.j > n)
                throw MalformedCorners("corner (" + std::to_string(c.i) + "," +
                                       std::to_string(c.j) + ") outside grid 1.." +
                                       std::to_string(n));
        if (!monotone_corner_list(*list))
            throw MalformedCorners("corner rows must strictly increase and columns strictly decrease");
    }

    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            bool in = true;
            for (Cell c : upper_inside)
                if (i > c.i && j > c.j) { in = false; break; }
            for (Cell c : lower_inside)
                if (in && i < c.i && j < c.j) { in = false; break; }
            if (in) cells.push_back({i, j});
        }
    return validate_ladder(n, cells);
}

CornerData corners(const Ladder& ladder) {
    Profile p = profile_of(ladder);
    const std::vector<int>& rows = p.rows;
    const int r_min = rows.front(), r_max = rows.back();

    // Upper inside corners: one per drop of the row-max profile, plus a
    // terminal diagonal corner when rows below r_max must be cut off, plus
    // the top-right cell as a vacuous leading corner when none sits in r_min.
    std::vector<Cell> ui;
    for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
        int d = p.hi[rows[t + 1]];
        if (d < p.hi[rows[t]] && (ui.empty() || d < ui.back().j))
            ui.push_back({rows[t], d});
    }
    if (r_max < ladder.n() && p.hi[r_max] > r_max && (ui.empty() || r_max < ui.back().j))
        ui.push_back({r_max, r_max});
    bool prepended = ui.empty() || ui.front().i > r_min;
    if (prepended && (ui.empty() || p.hi[r_min] > ui.front().j))
        ui.insert(ui.begin(), {r_min, p.hi[r_min]});
    else
        prepended = false;

    // Visible lower corner: leading rows whose min column sits above the
    // diagonal are bounded below by a single corner (one suffices for any
    // valid symmetric region).
    std::vector<Cell> li;
    {
        int last_high = 0;
        for (int row : rows) {
            if (p.lo[row] <= row) break;
            last_high = row;
        }
        if (last_high > 0) li.push_back({last_high + 1, p.lo[r_min]});
    }

    // Convention: the first lower and upper inside corners coincide. Met by
    // sharing a vacuous corner whenever the region admits one.
    auto safe_as_upper = [&](Cell c) {
        for (const Cell& x : ladder.cells())
            if (x.i > c.i && x.j > c.j) return false;
        return true;
    };
    if (li.empty()) {
        li.push_back(ui.front());
    } else if (li.front() != ui.front()) {
        Cell top = ui.front();
        if (top.i < li.front().i && top.j > li.front().j) {
            li.insert(li.begin(), top);
        } else if (prepended && safe_as_upper(li.front()) &&
                   (ui.size() == 1 || (li.front().i < ui[1].i && li.front().j > ui[1].j))) {
            ui.front() = li.front();
        }
    }

    CornerData cd;
    cd.lower_inside = li;
    cd.upper_inside = ui;
    for (std::size_t l = 0; l + 1 < li.size(); ++l)
        cd.lower_outside.push_back({li[l].i, li[l + 1].j});
    if (li.back().i != li.back().j) cd.lower_outside.push_back({li.back().i, li.back().i});
    if (cd.lower_outside.empty()) cd.lower_outside.push_back(li.back());
    // Upper outside corners are the componentwise-maximal cells: exactly the
    // set whose subladders cover L+. The neighbor-pair formula misses the
    // top-right extremity when a leading corner is vacuous.
    for (const Cell& c : ladder.cells()) {
        bool maximal = true;
        for (const Cell& x : ladder.cells())
            if (x != c && x.i >= c.i && x.j >= c.j) { maximal = false; break; }
        if (maximal) cd.upper_outside.push_back(c);
    }
    return cd;
}

std::vector<Cell> upper_border(const Ladder& ladder) {
    const std::vector<Cell> ui = corners(ladder).upper_inside;
    const int r = static_cast<int>(ui.size());
    std::vector<Cell> border;
    auto push = [&](int i, int j) {
        if (ladder.contains({i, j}) && i <= j) border.push_back({i, j});
    };
    for (int l = 0; l < r; ++l) {
        int c_next = (l + 1 < r) ? ui[l + 1].i : ui[l].j;
        for (int c = ui[l].i; c <= c_next; ++c) push(c, ui[l].j);
        int d_top = (l == 0) ? ladder.row_max(ui[0].i).value_or(ui[0].j) : ui[l - 1].j;
        for (int d = ui[l].j; d <= d_top; ++d) push(ui[l].i, d);
    }
    std::sort(border.begin(), border.end(),
              [](Cell a, Cell b) { return a.i != b.i ? a.i < b.i : a.j > b.j; });
    border.erase(std::unique(border.begin(), border.end()), border.end());
    return border;
}

Ladder subladder_at(const Ladder& ladder, int c, int d) {
    if (!ladder.contains({c, d})) throw CellNotInLadder({c, d});
    std::vector<Cell> cells;
    for (const Cell& x : ladder.cells())
        if (x.i <= c && x.j <= d) cells.push_back(x);
    return validate_ladder(ladder.n(), cells);
}

}  // namespace symladder
