#include "symladder/biliaison.hpp"

#include <algorithm>

#include "symladder/errors.hpp"

namespace symladder {

namespace {

struct PivotFrame {
    int k = 0;
    int v = 0, w = 0, t = 0;
    int v_prev = 0, w_next = 0;  // sentinel 0 at the chain ends
};

PivotFrame frame_at(const MixedLadderIdeal& ideal, int k) {
    const auto& pts = ideal.points();
    PivotFrame f;
    f.k = k;
    f.v = pts[static_cast<std::size_t>(k) - 1].v;
    f.w = pts[static_cast<std::size_t>(k) - 1].w;
    f.t = ideal.sizes()[static_cast<std::size_t>(k) - 1];
    f.v_prev = k >= 2 ? pts[static_cast<std::size_t>(k) - 2].v : 0;
    f.w_next = k < ideal.s() ? pts[static_cast<std::size_t>(k)].w : 0;
    return f;
}

PivotFrame checked_frame(const MixedLadderIdeal& ideal, int k) {
    if (!is_normalized(ideal)) throw NotNormalized();
    if (k < 1 || k > ideal.s()) throw InvalidPivot(k);
    const PivotFrame f = frame_at(ideal, k);
    if (f.t < 2 || f.v <= f.v_prev || f.w <= f.w_next) throw InvalidPivot(k);
    return f;
}

std::vector<Cell> hook_cells(const Ladder& lad, const PivotFrame& f) {
    std::vector<Cell> out;
    for (int i = f.v_prev + 1; i <= f.v - 1; ++i)
        if (lad.contains({i, f.w})) out.push_back({i, f.w});
    out.push_back({f.v, f.w});
    // the row segment stops at the diagonal: positions left of it mirror
    // cells in other columns, which stay
    for (int j = f.w - 1; j >= std::max(f.w_next + 1, f.v); --j)
        if (lad.contains({f.v, j})) out.push_back({f.v, j});
    return out;
}

Ladder without(const Ladder& lad, const std::vector<Cell>& removed) {
    std::vector<Cell> cells = lad.cells();
    std::erase_if(cells, [&](Cell c) {
        return std::find(removed.begin(), removed.end(), c) != removed.end();
    });
    return validate_ladder(lad.n(), cells);
}

// lambda_p = x[p,w]/f, nonzero only for rows strictly between the pivot and
// its predecessor whose column-w cell exists
bool lambda_nonzero(const Ladder& lad, const PivotFrame& f, int p) {
    return p > f.v_prev && p < f.v && lad.contains({p, f.w});
}

// Appends coeff * lead * Phi(v, y) / f^pow to the rule, where Phi(v, y) is
// the backward preimage of the matrix entry at position (v, y): a plain
// variable unless column y of the quadrant was itself reduced.
void append_phi_entry(std::vector<RuleTerm>& rule, int coeff, const std::vector<Cell>& lead,
                      int pow, const Ladder& lad, const PivotFrame& f, int y) {
    auto with = [&](Cell extra, int extra_pow) {
        RuleTerm term{coeff, lead, pow + extra_pow};
        term.cells.push_back(extra);
        std::sort(term.cells.begin(), term.cells.end());
        rule.push_back(std::move(term));
    };
    with(canonical(Cell{f.v, y}), 0);
    if (y < f.v && f.v < f.w && lambda_nonzero(lad, f, y)) {
        RuleTerm term{coeff, lead, pow + 1};
        term.cells.push_back(Cell{y, f.w});
        term.cells.push_back(Cell{f.v, f.v});
        std::sort(term.cells.begin(), term.cells.end());
        rule.push_back(std::move(term));
    }
}

}  // namespace

std::vector<Cell> deleted_cells_at(const MixedLadderIdeal& ideal, int k) {
    return hook_cells(ideal.ladder(), checked_frame(ideal, k));
}

BiliaisonStep descend_step(const MixedLadderIdeal& ideal) {
    if (!is_normalized(ideal)) throw NotNormalized();
    const auto k = pivot(ideal);
    if (!k) throw NoPivot();
    const PivotFrame f = checked_frame(ideal, *k);
    const std::size_t ki = static_cast<std::size_t>(*k) - 1;

    std::vector<Point> tpts = ideal.points();
    std::vector<int> tsz = ideal.sizes();
    tpts[ki] = {f.v - 1, f.w - 1};
    tsz[ki] = f.t - 1;
    MixedLadderIdeal target =
        normalize(mk_ideal(without(ideal.ladder(), hook_cells(ideal.ladder(), f)), tpts, tsz));

    std::vector<Point> jpts(ideal.points().begin(), ideal.points().begin() + ki);
    std::vector<int> jsz(ideal.sizes().begin(), ideal.sizes().begin() + ki);
    jpts.push_back({f.v - 1, f.w});
    jsz.push_back(f.t);
    jpts.push_back({f.v, f.w - 1});
    jsz.push_back(f.t);
    jpts.insert(jpts.end(), ideal.points().begin() + ki + 1, ideal.points().end());
    jsz.insert(jsz.end(), ideal.sizes().begin() + ki + 1, ideal.sizes().end());
    MixedLadderIdeal link =
        normalize(mk_ideal(without(ideal.ladder(), {{f.v, f.w}}), jpts, jsz));

    Minor f_num, f_den;
    for (int a = f.v - f.t + 1; a <= f.v - 1; ++a) f_num.rows.push_back(a);
    for (int b = f.w - f.t + 1; b <= f.w - 1; ++b) f_num.cols.push_back(b);
    for (int a = f.v - f.t + 1; a <= f.v; ++a) f_den.rows.push_back(a);
    for (int b = f.w - f.t + 1; b <= f.w; ++b) f_den.cols.push_back(b);
    return BiliaisonStep{ideal, std::move(target), std::move(link), *k,
                         std::move(f_num), std::move(f_den), 1};
}

BiliaisonCertificate descend_chain(const MixedLadderIdeal& ideal) {
    MixedLadderIdeal cur = normalize(ideal);
    std::vector<BiliaisonStep> steps;
    while (pivot(cur).has_value()) {
        steps.push_back(descend_step(cur));
        cur = steps.back().target;
    }
    const int count = static_cast<int>(steps.size());
    return BiliaisonCertificate{std::move(steps), std::move(cur), count, 2 * count};
}

LocalizationMap lemma_local_data(const MixedLadderIdeal& ideal, int k) {
    const PivotFrame f = checked_frame(ideal, k);
    const Ladder& lad = ideal.ladder();
    LocalizationMap map;
    map.inverted_cell = {f.v, f.w};
    map.transported_cells = hook_cells(lad, f);

    // Rules act on the cells of the quadrant at the pivot, minus its own row
    // and column; all other variables are fixed.  The backward direction is
    // the symmetric row-and-column reduction of the matrix against the pivot
    // entry, the forward direction its exact inverse.
    for (const Cell& c : lad.cells()) {
        if (c.i > f.v || c.j > f.w || c.i == f.v || c.j == f.w) continue;
        const bool la = lambda_nonzero(lad, f, c.i);
        const bool lb = lambda_nonzero(lad, f, c.j);
        if (!la && !lb) continue;

        std::vector<RuleTerm> fwd{{1, {c}, 0}};
        std::vector<RuleTerm> bwd{{1, {c}, 0}};
        if (la) {
            append_phi_entry(fwd, 1, {Cell{c.i, f.w}}, 1, lad, f, c.j);
            RuleTerm term{-1, {Cell{c.i, f.w}, canonical(Cell{f.v, c.j})}, 1};
            std::sort(term.cells.begin(), term.cells.end());
            bwd.push_back(std::move(term));
        }
        if (lb) {
            append_phi_entry(fwd, 1, {Cell{c.j, f.w}}, 1, lad, f, c.i);
            RuleTerm term{-1, {Cell{c.j, f.w}, canonical(Cell{f.v, c.i})}, 1};
            std::sort(term.cells.begin(), term.cells.end());
            bwd.push_back(std::move(term));
        }
        if (la && lb) {
            RuleTerm cross{1, {Cell{c.i, f.w}, Cell{c.j, f.w}, Cell{f.v, f.v}}, 2};
            std::sort(cross.cells.begin(), cross.cells.end());
            bwd.push_back(cross);
            cross.coeff = -1;
            fwd.push_back(std::move(cross));
        }
        map.forward_rules.emplace(c, std::move(fwd));
        map.backward_rules.emplace(c, std::move(bwd));
    }
    return map;
}

}  // namespace symladder
