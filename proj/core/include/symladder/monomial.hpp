#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "symladder/errors.hpp"

namespace symladder {

// Sparse power product: (variable id, exponent) pairs with exponent > 0,
// sorted by variable id.  The defaulted comparison is structural and exists
// for container keys; ranking monomials is the job of MonomialOrder.
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }

    int exp_of(int var) const {
        for (const auto& [v, e] : exps)
            if (v == var) return e;
        return 0;
    }

    bool is_one() const { return exps.empty(); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial mono_var(int var, int exp = 1) { return Monomial{{{var, exp}}}; }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.exps.reserve(a.exps.size() + b.exps.size());
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        if (a.exps[i].first < b.exps[j].first)
            out.exps.push_back(a.exps[i++]);
        else if (a.exps[i].first > b.exps[j].first)
            out.exps.push_back(b.exps[j++]);
        else {
            out.exps.emplace_back(a.exps[i].first, a.exps[i].second + b.exps[j].second);
            ++i, ++j;
        }
    }
    out.exps.insert(out.exps.end(), a.exps.begin() + i, a.exps.end());
    out.exps.insert(out.exps.end(), b.exps.begin() + j, b.exps.end());
    return out;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    std::size_t j = 0;
    for (const auto& [v, e] : a.exps) {
        while (j < b.exps.size() && b.exps[j].first < v) ++j;
        if (j == b.exps.size() || b.exps[j].first != v || b.exps[j].second < e) return false;
    }
    return true;
}

// b / a; requires mono_divides(a, b)
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [v, e] : b.exps) {
        int sub = 0;
        if (i < a.exps.size() && a.exps[i].first == v) sub = a.exps[i++].second;
        if (e - sub > 0) out.exps.emplace_back(v, e - sub);
        if (e - sub < 0) throw SymladderError("internal: monomial division underflow");
    }
    if (i != a.exps.size()) throw SymladderError("internal: monomial division underflow");
    return out;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        if (a.exps[i].first < b.exps[j].first)
            out.exps.push_back(a.exps[i++]);
        else if (a.exps[i].first > b.exps[j].first)
            out.exps.push_back(b.exps[j++]);
        else {
            out.exps.emplace_back(a.exps[i].first, std::max(a.exps[i].second, b.exps[j].second));
            ++i, ++j;
        }
    }
    out.exps.insert(out.exps.end(), a.exps.begin() + i, a.exps.end());
    out.exps.insert(out.exps.end(), b.exps.begin() + j, b.exps.end());
    return out;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        if (a.exps[i].first < b.exps[j].first)
            ++i;
        else if (a.exps[i].first > b.exps[j].first)
            ++j;
        else
            return false;
    }
    return true;
}

// Term order on monomials.  `priority` is a permutation of the variable ids,
// most significant first; empty means ids rank themselves.  degrevlex with
// the identity priority is the default everywhere.
struct MonomialOrder {
    enum class Kind { degrevlex, lex };

    Kind kind = Kind::degrevlex;
    std::vector<int> rank_of;  // rank_of[var] = significance rank; empty = identity

    int rank(int var) const {
        if (rank_of.empty()) return var;
        if (var < 0 || var >= static_cast<int>(rank_of.size()) || rank_of[var] < 0)
            throw SymladderError("monomial order priority does not cover variable");
        return rank_of[var];
    }
};

inline MonomialOrder make_order(MonomialOrder::Kind kind, const std::vector<int>& priority = {}) {
    MonomialOrder o;
    o.kind = kind;
    if (!priority.empty()) {
        int max_var = *std::max_element(priority.begin(), priority.end());
        o.rank_of.assign(static_cast<std::size_t>(max_var) + 1, -1);
        for (std::size_t r = 0; r < priority.size(); ++r) {
            const int v = priority[r];
            if (v < 0 || o.rank_of[v] != -1)
                throw SymladderError("monomial order priority must be a permutation of variable ids");
            o.rank_of[v] = static_cast<int>(r);
        }
    }
    return o;
}

// Three-way comparison under the order: positive when a ranks above b.
inline int order_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    if (o.kind == MonomialOrder::Kind::degrevlex) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    // merge exponents into (rank, e_a - e_b) differences
    std::vector<std::pair<int, int>> diff;
    diff.reserve(a.exps.size() + b.exps.size());
    for (const auto& [v, e] : a.exps) diff.emplace_back(o.rank(v), e);
    for (const auto& [v, e] : b.exps) diff.emplace_back(o.rank(v), -e);
    std::sort(diff.begin(), diff.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<int, int>> merged;
    for (const auto& [r, d] : diff) {
        if (!merged.empty() && merged.back().first == r)
            merged.back().second += d;
        else
            merged.emplace_back(r, d);
    }
    if (o.kind == MonomialOrder::Kind::lex) {
        for (const auto& [r, d] : merged)
            if (d != 0) return d > 0 ? 1 : -1;
        return 0;
    }
    // degrevlex, equal degrees: the least significant differing variable
    // decides, smaller exponent wins
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        if (it->second != 0) return it->second < 0 ? 1 : -1;
    return 0;
}

}  // namespace symladder
