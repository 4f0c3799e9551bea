#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symladder/errors.hpp"
#include "symladder/ladder.hpp"
#include "symladder/monomial.hpp"

namespace symladder {

// Maps ladder cells to variable ids, row-major, with optional auxiliary
// variables (a localization helper) appended after the cell block.
class VarTable {
  public:
    explicit VarTable(const Ladder& lad) {
        for (const Cell& c : lad.cells()) push_cell(c);
    }

    explicit VarTable(const CellSet& cells) {
        for (const Cell& c : cells) push_cell(c);
    }

    // every canonical cell of the n x n symmetric grid
    static VarTable full_grid(int n) {
        CellSet cs;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) cs.insert({i, j});
        return VarTable(cs);
    }

    int add_aux(std::string label) {
        labels_.push_back(std::move(label));
        return static_cast<int>(labels_.size()) - 1;
    }

    std::optional<int> try_id(Cell c) const {
        const auto it = index_.find(canonical(c));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int id(Cell c) const {
        const auto v = try_id(c);
        if (!v) throw IndexOutOfRange("no variable for cell " + detail::cell_str(c));
        return *v;
    }

    bool is_cell(int var) const { return var >= 0 && var < static_cast<int>(cells_.size()); }

    Cell cell(int var) const {
        if (!is_cell(var)) throw SymladderError("variable id has no cell");
        return cells_[static_cast<std::size_t>(var)];
    }

    int count() const { return static_cast<int>(labels_.size()); }

    const std::string& label(int var) const {
        if (var < 0 || var >= count()) throw SymladderError("variable id out of range");
        return labels_[static_cast<std::size_t>(var)];
    }

  private:
    void push_cell(const Cell& c) {
        index_.emplace(c, static_cast<int>(cells_.size()));
        cells_.push_back(c);
        labels_.push_back("x[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]");
    }

    std::vector<Cell> cells_;
    std::map<Cell, int> index_;
    std::vector<std::string> labels_;
};

// Terms sorted strictly descending under the order they were built with;
// no zero coefficients.  Two polynomials built under the same order are
// mathematically equal iff structurally equal.
template <class F>
struct Poly {
    using Coeff = typename F::Elem;
    std::vector<std::pair<Monomial, Coeff>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().first; }
    const Coeff& lc() const { return terms.front().second; }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

template <class F>
Poly<F> make_poly(std::vector<std::pair<Monomial, typename F::Elem>> raw, const MonomialOrder& o,
                  const F& field) {
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        return order_cmp(a.first, b.first, o) > 0;
    });
    Poly<F> out;
    for (auto& [m, c] : raw) {
        if (!out.terms.empty() && out.terms.back().first == m)
            out.terms.back().second = field.add(out.terms.back().second, c);
        else
            out.terms.emplace_back(std::move(m), std::move(c));
        if (!out.terms.empty() && field.is_zero(out.terms.back().second)) out.terms.pop_back();
    }
    return out;
}

// Rebuild the term list under a (possibly different) order.
template <class F>
Poly<F> poly_resort(const Poly<F>& p, const MonomialOrder& o, const F& field) {
    return make_poly<F>(p.terms, o, field);
}

template <class F>
Poly<F> poly_zero(const F&) {
    return {};
}

template <class F>
Poly<F> poly_const(const typename F::Elem& c, const F& field) {
    Poly<F> out;
    if (!field.is_zero(c)) out.terms.emplace_back(Monomial{}, c);
    return out;
}

template <class F>
Poly<F> poly_var(int var, const F& field) {
    Poly<F> out;
    out.terms.emplace_back(mono_var(var), field.one());
    return out;
}

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b, const MonomialOrder& o, const F& field) {
    Poly<F> out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        const int c = order_cmp(a.terms[i].first, b.terms[j].first, o);
        if (c > 0)
            out.terms.push_back(a.terms[i++]);
        else if (c < 0)
            out.terms.push_back(b.terms[j++]);
        else {
            auto s = field.add(a.terms[i].second, b.terms[j].second);
            if (!field.is_zero(s)) out.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i, ++j;
        }
    }
    out.terms.insert(out.terms.end(), a.terms.begin() + i, a.terms.end());
    out.terms.insert(out.terms.end(), b.terms.begin() + j, b.terms.end());
    return out;
}

template <class F>
Poly<F> poly_neg(Poly<F> p, const F& field) {
    for (auto& [m, c] : p.terms) c = field.neg(c);
    return p;
}

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b, const MonomialOrder& o, const F& field) {
    return poly_add(a, poly_neg(b, field), o, field);
}

// (m, c) * p.  Monomial orders are multiplicative, so sortedness survives.
template <class F>
Poly<F> term_mul(const Monomial& m, const typename F::Elem& c, const Poly<F>& p, const F& field) {
    Poly<F> out;
    if (field.is_zero(c)) return out;
    out.terms.reserve(p.terms.size());
    for (const auto& [pm, pc] : p.terms) {
        auto prod = field.mul(c, pc);
        if (!field.is_zero(prod)) out.terms.emplace_back(mono_mul(m, pm), std::move(prod));
    }
    return out;
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b, const MonomialOrder& o, const F& field) {
    std::vector<std::pair<Monomial, typename F::Elem>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& [am, ac] : a.terms)
        for (const auto& [bm, bc] : b.terms) raw.emplace_back(mono_mul(am, bm), field.mul(ac, bc));
    return make_poly<F>(std::move(raw), o, field);
}

template <class F>
Poly<F> poly_scale(Poly<F> p, const typename F::Elem& c, const F& field) {
    if (field.is_zero(c)) return {};
    for (auto& [m, pc] : p.terms) pc = field.mul(pc, c);
    return p;
}

template <class F>
Poly<F> poly_monic(Poly<F> p, const F& field) {
    if (p.is_zero() || field.is_one(p.lc())) return p;
    return poly_scale(std::move(p), field.inv(p.lc()), field);
}

// Canonical text form: every term signed explicitly, coefficient magnitude
// always written, factors ascending by variable id.  "+x" never appears;
// "+1*x[1,2]" does.
template <class F>
std::string poly_str(const Poly<F>& p, const VarTable& vt, const F& field) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms) {
        std::string cs = field.str(c);
        if (!cs.empty() && cs.front() == '-') {
            out += '-';
            cs.erase(cs.begin());
        } else {
            out += '+';
        }
        out += cs;
        for (const auto& [v, e] : m.exps) {
            out += '*';
            out += vt.label(v);
            if (e > 1) out += '^' + std::to_string(e);
        }
    }
    return out;
}

}  // namespace symladder
