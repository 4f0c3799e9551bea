#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "symladder/polynomial.hpp"

namespace symladder {

// Hard caps for the exact engine.  Exceeding one raises ResourceBound; the
// verification layer converts that into a "skipped" check, never a pass.
struct GroebnerBounds {
    int max_degree = 30;
    long max_pairs = 200000;
};

// Fully reduce p against basis: no term of the result is divisible by any
// basis leading monomial.  Reducer choice is the first match in basis order,
// so the result is deterministic for a fixed basis sequence.
template <class F>
Poly<F> normal_form(Poly<F> p, const std::vector<Poly<F>>& basis, const MonomialOrder& o,
                    const F& field, const GroebnerBounds& bounds = {}) {
    p = poly_resort(p, o, field);  // tolerate polynomials built under another order
    Poly<F> rem;
    while (!p.is_zero()) {
        if (p.lm().degree() > bounds.max_degree)
            throw ResourceBound("normal form exceeded degree cap " +
                                std::to_string(bounds.max_degree));
        bool reduced = false;
        for (const Poly<F>& g : basis) {
            if (g.is_zero() || !mono_divides(g.lm(), p.lm())) continue;
            const Monomial q = mono_div(p.lm(), g.lm());
            const auto c = field.div(p.lc(), g.lc());
            p = poly_sub(p, term_mul(q, c, g, field), o, field);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

namespace detail {

template <class F>
Poly<F> s_poly(const Poly<F>& a, const Poly<F>& b, const Monomial& lcm, const MonomialOrder& o,
               const F& field) {
    const auto left = term_mul(mono_div(lcm, a.lm()), field.inv(a.lc()), a, field);
    const auto right = term_mul(mono_div(lcm, b.lm()), field.inv(b.lc()), b, field);
    return poly_sub(left, right, o, field);
}

}  // namespace detail

// Buchberger with the normal (minimal-lcm) selection strategy, the coprime
// criterion, and the chain criterion over settled pairs.  Output is the
// reduced basis: monic, pairwise tail-reduced, sorted ascending by leading
// monomial, hence unique for (ideal, order).
template <class F>
std::vector<Poly<F>> groebner(const std::vector<Poly<F>>& gens, const MonomialOrder& o,
                              const F& field, const GroebnerBounds& bounds = {}) {
    std::vector<Poly<F>> basis;
    for (const Poly<F>& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() > bounds.max_degree)
            throw ResourceBound("generator exceeds degree cap " +
                                std::to_string(bounds.max_degree));
        basis.push_back(poly_monic(poly_resort(g, o, field), field));
    }

    using Pair = std::pair<int, int>;
    std::set<Pair> pending;
    std::set<Pair> settled;
    const auto add_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) add_pairs(j);

    long processed = 0;
    while (!pending.empty()) {
        if (++processed > bounds.max_pairs)
            throw ResourceBound("pair cap " + std::to_string(bounds.max_pairs) + " exceeded");

        // normal strategy: smallest lcm under the order, ties by index
        auto best = pending.begin();
        Monomial best_lcm = mono_lcm(basis[best->first].lm(), basis[best->second].lm());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = mono_lcm(basis[it->first].lm(), basis[it->second].lm());
            if (order_cmp(l, best_lcm, o) < 0) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);
        settled.insert({i, j});

        if (mono_coprime(basis[i].lm(), basis[j].lm())) continue;

        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == i || k == j || !mono_divides(basis[k].lm(), best_lcm)) continue;
            const Pair ik{std::min(i, k), std::max(i, k)};
            const Pair jk{std::min(j, k), std::max(j, k)};
            chained = settled.count(ik) && settled.count(jk);
        }
        if (chained) continue;

        Poly<F> r = normal_form(detail::s_poly(basis[i], basis[j], best_lcm, o, field), basis, o,
                                field, bounds);
        if (r.is_zero()) continue;
        if (r.degree() > bounds.max_degree)
            throw ResourceBound("basis element exceeds degree cap " +
                                std::to_string(bounds.max_degree));
        basis.push_back(poly_monic(std::move(r), field));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < basis.size() && !dominated; ++k) {
            if (k == i) continue;
            if (!mono_divides(basis[k].lm(), basis[i].lm())) continue;
            // on equal leading monomials keep the earlier element
            dominated = basis[k].lm() != basis[i].lm() || k < i;
        }
        if (!dominated) minimal.push_back(basis[i]);
    }

    // tail-reduce each against the rest
    std::vector<Poly<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        Poly<F> r = normal_form(minimal[i], others, o, field, bounds);
        if (!r.is_zero()) reduced.push_back(poly_monic(std::move(r), field));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return order_cmp(a.lm(), b.lm(), o) < 0;
    });
    return reduced;
}

// Membership in the ideal spanned by an already computed basis.
template <class F>
bool reduces_to_zero(const Poly<F>& p, const std::vector<Poly<F>>& basis, const MonomialOrder& o,
                     const F& field, const GroebnerBounds& bounds = {}) {
    return normal_form(p, basis, o, field, bounds).is_zero();
}

namespace detail {

inline void independent_sets(const std::vector<std::uint64_t>& supports, std::uint64_t excluded,
                             int num_vars, int& best, std::set<std::uint64_t>& seen) {
    if (num_vars - std::popcount(excluded) <= best) return;
    if (!seen.insert(excluded).second) return;
    for (const std::uint64_t s : supports) {
        if ((s & excluded) != 0) continue;
        // this support is still fully inside the candidate set; exclude one
        // of its variables each way
        for (int v = 0; v < 64; ++v)
            if (s & (std::uint64_t{1} << v))
                independent_sets(supports, excluded | (std::uint64_t{1} << v), num_vars, best,
                                 seen);
        return;
    }
    best = std::max(best, num_vars - std::popcount(excluded));
}

}  // namespace detail

// Krull dimension of K[x_1..x_num_vars] / (gens), computed as the maximum
// size of a variable set disjoint from every leading-term support of a
// Groebner basis.  Empty gens give num_vars; the unit ideal gives -1.
template <class F>
int krull_dimension(const std::vector<Poly<F>>& gens, int num_vars, const MonomialOrder& o,
                    const F& field, const GroebnerBounds& bounds = {}) {
    if (num_vars < 0 || num_vars > 63)
        throw ResourceBound("krull_dimension supports at most 63 variables");
    const auto basis = groebner(gens, o, field, bounds);
    if (basis.empty()) return num_vars;
    std::vector<std::uint64_t> supports;
    for (const Poly<F>& g : basis) {
        if (g.lm().is_one()) return -1;
        std::uint64_t mask = 0;
        for (const auto& [v, e] : g.lm().exps) {
            if (v >= num_vars) throw SymladderError("generator uses a variable beyond num_vars");
            mask |= std::uint64_t{1} << v;
        }
        supports.push_back(mask);
    }
    // drop supports that contain another support: they exclude nothing extra
    std::sort(supports.begin(), supports.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint64_t> minimal;
    for (const std::uint64_t s : supports) {
        bool redundant = false;
        for (const std::uint64_t m : minimal)
            if ((m & s) == m) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(s);
    }
    int best = 0;
    std::set<std::uint64_t> seen;
    detail::independent_sets(minimal, 0, num_vars, best, seen);
    return best;
}

}  // namespace symladder
