#pragma once

#include <map>

#include "symladder/biliaison.hpp"
#include "symladder/polynomial.hpp"

namespace symladder {

// num / f^denom_pow for a fixed inverted variable f.  No cancellation is
// performed: membership and identity checks multiply through by f instead.
template <class F>
struct LocalizedPoly {
    Poly<F> num;
    int denom_pow = 0;
};

template <class F>
LocalizedPoly<F> loc_from_poly(Poly<F> p) {
    return {std::move(p), 0};
}

template <class F>
LocalizedPoly<F> loc_add(const LocalizedPoly<F>& a, const LocalizedPoly<F>& b, const Poly<F>& f,
                         const MonomialOrder& o, const F& field) {
    const int pow = std::max(a.denom_pow, b.denom_pow);
    Poly<F> an = a.num, bn = b.num;
    for (int i = a.denom_pow; i < pow; ++i) an = poly_mul(an, f, o, field);
    for (int i = b.denom_pow; i < pow; ++i) bn = poly_mul(bn, f, o, field);
    return {poly_add(an, bn, o, field), pow};
}

template <class F>
LocalizedPoly<F> loc_mul(const LocalizedPoly<F>& a, const LocalizedPoly<F>& b,
                         const MonomialOrder& o, const F& field) {
    return {poly_mul(a.num, b.num, o, field), a.denom_pow + b.denom_pow};
}

// Instantiates one substitution rule as a localized polynomial.
template <class F>
LocalizedPoly<F> rule_poly(const std::vector<RuleTerm>& rule, const VarTable& vt,
                           const Poly<F>& f, const MonomialOrder& o, const F& field) {
    LocalizedPoly<F> out{poly_zero(field), 0};
    for (const RuleTerm& term : rule) {
        Poly<F> prod = poly_const(field.from_int(term.coeff), field);
        for (const Cell& c : term.cells) prod = poly_mul(prod, poly_var(vt.id(c), field), o, field);
        out = loc_add(out, LocalizedPoly<F>{std::move(prod), term.denom_pow}, f, o, field);
    }
    return out;
}

// Applies a localization direction to a polynomial: every cell variable is
// replaced by its rule image (identity when the map has no rule for it).
// Non-cell variables are fixed.
template <class F>
LocalizedPoly<F> apply_rules(const Poly<F>& p, const std::map<Cell, std::vector<RuleTerm>>& rules,
                             const VarTable& vt, const Poly<F>& f, const MonomialOrder& o,
                             const F& field) {
    std::map<int, LocalizedPoly<F>> images;
    for (const auto& [cell, rule] : rules) images.emplace(vt.id(cell), rule_poly(rule, vt, f, o, field));

    LocalizedPoly<F> out{poly_zero(field), 0};
    for (const auto& [mono, coeff] : p.terms) {
        LocalizedPoly<F> acc{poly_const(coeff, field), 0};
        for (const auto& [var, exp] : mono.exps) {
            const auto it = images.find(var);
            const LocalizedPoly<F> base =
                it != images.end() ? it->second : loc_from_poly(poly_var(var, field));
            for (int e = 0; e < exp; ++e) acc = loc_mul(acc, base, o, field);
        }
        out = loc_add(out, acc, f, o, field);
    }
    return out;
}

// True when the localized value equals the plain polynomial target, checked
// by cross-multiplying with f.
template <class F>
bool loc_equals_poly(const LocalizedPoly<F>& value, const Poly<F>& target, const Poly<F>& f,
                     const MonomialOrder& o, const F& field) {
    Poly<F> scaled = target;
    for (int i = 0; i < value.denom_pow; ++i) scaled = poly_mul(scaled, f, o, field);
    return poly_resort(value.num, o, field) == scaled;
}

}  // namespace symladder
