#pragma once

#include <map>
#include <vector>

#include "symladder/ideal.hpp"

namespace symladder {

// One elementary descent.  The source ideal drops to the target by dividing
// out the ratio of the two recorded minors; the link ideal carries both.
// Every step moves the height ladder down by exactly one on the link side.
struct BiliaisonStep {
    MixedLadderIdeal source;
    MixedLadderIdeal target;
    MixedLadderIdeal link;
    int pivot_k = 0;      // 1-based index into source.points()
    Minor f_numerator;    // (t_k - 1)-minor, rows v-t+1..v-1, cols w-t+1..w-1
    Minor f_denominator;  // t_k-minor, rows v-t+1..v, cols w-t+1..w
    int height_shift = 1;
};

// A full descent: repeated steps until every minor size is 1.  The terminal
// ideal is generated by the indeterminates on the height support of the
// initial ideal.
struct BiliaisonCertificate {
    std::vector<BiliaisonStep> steps;
    MixedLadderIdeal terminal;
    int biliaison_count = 0;  // = steps.size()
    int g_link_count = 0;     // two G-links per elementary biliaison
};

// coeff * (product of the cells' variables) / f^denom_pow, where f is the
// inverted cell's variable
struct RuleTerm {
    int coeff = 0;
    std::vector<Cell> cells;
    int denom_pow = 0;

    friend auto operator<=>(const RuleTerm&, const RuleTerm&) = default;
};

// Substitution data for the one-step localization isomorphism.  Cells absent
// from a rule map are fixed by that direction; transported_cells are the
// cells deleted from the source ladder, which both directions fix and whose
// variables the target ring keeps as free coordinates.
struct LocalizationMap {
    Cell inverted_cell;
    std::map<Cell, std::vector<RuleTerm>> forward_rules;   // source ring into the localized target
    std::map<Cell, std::vector<RuleTerm>> backward_rules;  // target ring into the localized source
    std::vector<Cell> transported_cells;
};

// Performs one descent at the preferred pivot.  Throws NotNormalized on a
// raw ideal and NoPivot when every minor size is already 1.
BiliaisonStep descend_step(const MixedLadderIdeal& ideal);

// Runs descend_step to exhaustion.  Accepts any valid ideal; normalizes
// before the first step.
BiliaisonCertificate descend_chain(const MixedLadderIdeal& ideal);

// The substitution rules relating the source ring localized at x[v_k,w_k]
// with the target ring of the step at pivot k.  Throws InvalidPivot when k
// does not satisfy the pivot conditions.
LocalizationMap lemma_local_data(const MixedLadderIdeal& ideal, int k);

// Cells removed from the ladder by the step at pivot k: the column hook
// between the neighbor points, listed column segment top-down, then the
// pivot, then the row segment right-to-left.
std::vector<Cell> deleted_cells_at(const MixedLadderIdeal& ideal, int k);

}  // namespace symladder
