// Acceptance battery: prints one pass/fail line per criterion and exits with
// the number of failed criteria.  All seeds, fields, and bounds are pinned
// here; every numeric expectation is computed by an independent oracle
// (Groebner codimension, brute-force region checks, exact localized
// arithmetic) rather than copied from the implementation under test.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symladder/biliaison.hpp"
#include "symladder/expand.hpp"
#include "symladder/field.hpp"
#include "symladder/groebner.hpp"
#include "symladder/height.hpp"
#include "symladder/localized.hpp"
#include "symladder/verify.hpp"
#include "testutil.hpp"

using namespace symladder;

namespace {

constexpr std::uint64_t kPrime = 32003;

Ladder full(int n) {
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({i, j});
    return validate_ladder(n, cells);
}

MixedLadderIdeal classical(int n, int t) { return mk_ideal(full(n), {{n, n}}, {t}); }

std::string ideal_key(const MixedLadderIdeal& ideal) {
    std::ostringstream os;
    os << ideal.ladder().n() << ";";
    for (const Cell& c : ideal.ladder().cells()) os << c.i << "," << c.j << " ";
    os << ";";
    for (const Point& p : ideal.points()) os << p.v << "," << p.w << " ";
    os << ";";
    for (int t : ideal.sizes()) os << t << " ";
    return os.str();
}

// ring codimension of the expanded generators, by Groebner basis over F_p
int ring_codimension(const MixedLadderIdeal& ideal) {
    const VarTable vt(ideal.ladder());
    const PrimeField field(kPrime);
    const MonomialOrder order;
    std::vector<Poly<PrimeField>> gens;
    for (const Minor& m : enumerate_generators(ideal))
        gens.push_back(expand_minor(m, vt, order, field));
    return vt.count() - krull_dimension(gens, vt.count(), order, field);
}

struct Outcome {
    bool ok = true;
    std::string tail;
    std::vector<std::string> diagnostics;

    void fail(std::string why) {
        ok = false;
        if (diagnostics.size() < 8) diagnostics.push_back(std::move(why));
    }
};

bool report(int index, const Outcome& outcome) {
    std::cout << "criterion " << index << ": " << (outcome.ok ? "PASS" : "FAIL") << "  "
              << outcome.tail << "\n";
    for (const std::string& line : outcome.diagnostics) std::cout << "    " << line << "\n";
    std::cout.flush();
    return outcome.ok;
}

// 1: random normalized ideals, combinatorial height == ring codimension
Outcome criterion1() {
    Outcome out;
    std::mt19937_64 rng(0xACCE5501);
    std::set<std::string> seen;
    int checked = 0;
    for (const Ladder& lad : testutil::random_ladders(0xACCE5501, 400, 5)) {
        if (checked >= 110) break;
        if (lad.size() > 15) continue;
        const MixedLadderIdeal ideal = normalize(testutil::random_ideal(rng, lad, 3));
        if (ideal.s() < 1 || ideal.s() > 2) continue;
        if (static_cast<int>(ideal.ladder().size()) > 15) continue;
        bool small = true;
        for (int t : ideal.sizes()) small = small && t <= 3;
        if (!small) continue;
        if (!seen.insert(ideal_key(ideal)).second) continue;

        const int h = h_plus(ideal).height;
        const int codim = ring_codimension(ideal);
        if (h != codim) {
            out.fail("height " + std::to_string(h) + " vs codimension " + std::to_string(codim) +
                     " on " + ideal_key(ideal));
        }
        ++checked;
    }
    if (checked < 100) out.fail("only " + std::to_string(checked) + " distinct ideals sampled");
    out.tail = "random normalized ideals: height equals ring codimension over F_" +
               std::to_string(kPrime) + " (" + std::to_string(checked) + " ideals)";
    return out;
}

// 2: full symmetric t-minors, closed-form height plus the same oracle
Outcome criterion2() {
    Outcome out;
    int cases = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int t = 2; t <= n; ++t) {
            const MixedLadderIdeal ideal = classical(n, t);
            const int expected = (n - t + 1) * (n - t + 2) / 2;
            const int h = h_plus(ideal).height;
            const int codim = ring_codimension(ideal);
            if (h != expected)
                out.fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + ": height " +
                         std::to_string(h) + " != " + std::to_string(expected));
            if (codim != expected)
                out.fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + ": codimension " +
                         std::to_string(codim) + " != " + std::to_string(expected));
            ++cases;
        }
    }
    out.tail = "full symmetric minors: height (n-t+1)(n-t+2)/2 confirmed by codimension (" +
               std::to_string(cases) + " cases)";
    return out;
}

// 3: descent chains have the certified shape and land on the height support
Outcome criterion3() {
    Outcome out;
    std::vector<MixedLadderIdeal> family;
    for (int n = 2; n <= 5; ++n)
        for (int t = 2; t <= n; ++t) family.push_back(classical(n, t));
    std::mt19937_64 rng(0xACCE5503);
    for (const Ladder& lad : testutil::random_ladders(0xACCE5503, 40, 6))
        family.push_back(testutil::random_ideal(rng, lad, 3));

    int chains = 0;
    for (const MixedLadderIdeal& raw : family) {
        const MixedLadderIdeal ideal = normalize(raw);
        const BiliaisonCertificate cert = descend_chain(ideal);
        int expected_steps = 0, size_sum = 0;
        for (int t : ideal.sizes()) {
            expected_steps += t - 1;
            size_sum += t;
        }
        if (cert.biliaison_count != expected_steps)
            out.fail("steps " + std::to_string(cert.biliaison_count) + " != " +
                     std::to_string(expected_steps) + " on " + ideal_key(ideal));
        if (cert.g_link_count != 2 * (size_sum - ideal.s()))
            out.fail("g-links " + std::to_string(cert.g_link_count) + " != " +
                     std::to_string(2 * (size_sum - ideal.s())) + " on " + ideal_key(ideal));

        const HeightProfile profile = h_plus(ideal);
        for (int t : cert.terminal.sizes())
            if (t != 1) out.fail("terminal size " + std::to_string(t) + " on " + ideal_key(ideal));
        const auto gens = enumerate_generators(cert.terminal);
        if (static_cast<int>(gens.size()) != profile.height)
            out.fail("terminal generators " + std::to_string(gens.size()) + " != height " +
                     std::to_string(profile.height) + " on " + ideal_key(ideal));
        if (ideal.s() > 0 && cert.terminal.ladder().cells() != profile.h_plus)
            out.fail("terminal cells differ from the height support on " + ideal_key(ideal));
        ++chains;
    }
    out.tail = "descent chains: step count, G-link count, terminal support (" +
               std::to_string(chains) + " chains)";
    return out;
}

// 4: per-step verification over F_p on small chains, rational spot checks
Outcome criterion4() {
    Outcome out;
    std::mt19937_64 rng(0xACCE5504);
    std::vector<BiliaisonCertificate> certs;
    certs.push_back(descend_chain(classical(3, 2)));
    certs.push_back(descend_chain(classical(4, 3)));
    for (const Ladder& lad : testutil::random_ladders(0xACCE5504, 80, 6)) {
        if (certs.size() >= 12) break;
        if (lad.size() > 12) continue;
        const BiliaisonCertificate cert = descend_chain(testutil::random_ideal(rng, lad, 3));
        if (!cert.steps.empty()) certs.push_back(cert);
    }

    int steps = 0, rational = 0;
    for (const BiliaisonCertificate& cert : certs) {
        for (const VerificationReport& report : verify_chain(cert, {false, kPrime})) {
            for (const CheckResult& check : report.checks)
                if (check.status != CheckStatus::pass)
                    out.fail("step " + std::to_string(report.step_index) + " check " + check.name +
                             (check.status == CheckStatus::fail ? " failed: " : " skipped: ") +
                             check.witness);
            ++steps;
        }
    }
    for (const BiliaisonCertificate& cert : certs) {
        if (rational >= 5) break;
        for (const BiliaisonStep& step : cert.steps) {
            if (rational >= 5) break;
            const VerificationReport report = verify_step(step, rational + 1, {true, 0});
            for (const CheckResult& check : report.checks)
                if (check.status != CheckStatus::pass)
                    out.fail("rational check " + check.name + " did not pass: " + check.witness);
            ++rational;
        }
    }
    if (certs.size() < 12) out.fail("only " + std::to_string(certs.size()) + " chains collected");
    if (rational < 5) out.fail("only " + std::to_string(rational) + " rational spot checks");
    out.tail = "per-step verification over F_" + std::to_string(kPrime) + " (" +
               std::to_string(certs.size()) + " chains, " + std::to_string(steps) + " steps, " +
               std::to_string(rational) + " rational spot checks)";
    return out;
}

// exact two-sided inverse of the localization rules at one pivot
bool two_sided_identity_ok(const MixedLadderIdeal& ideal, int k) {
    const LocalizationMap map = lemma_local_data(ideal, k);
    const VarTable vt(ideal.ladder());
    const PrimeField field(kPrime);
    const MonomialOrder o;
    const Poly<PrimeField> f = poly_var(vt.id(map.inverted_cell), field);
    for (const Cell& c : ideal.ladder().cells()) {
        const Poly<PrimeField> x = poly_var(vt.id(c), field);
        for (bool forward_first : {true, false}) {
            const auto& first = forward_first ? map.forward_rules : map.backward_rules;
            const auto& second = forward_first ? map.backward_rules : map.forward_rules;
            const LocalizedPoly<PrimeField> p = apply_rules(x, first, vt, f, o, field);
            const LocalizedPoly<PrimeField> q = apply_rules(p.num, second, vt, f, o, field);
            Poly<PrimeField> expected = x;
            for (int e = 0; e < p.denom_pow + q.denom_pow; ++e)
                expected = poly_mul(expected, f, o, field);
            if (!(q.num == expected)) return false;
        }
    }
    return true;
}

// 5: localization maps invert exactly on both sides
Outcome criterion5() {
    Outcome out;
    int instances = 0;
    std::vector<MixedLadderIdeal> family;
    family.push_back(normalize(classical(3, 2)));
    family.push_back(normalize(classical(4, 3)));
    family.push_back(normalize(classical(5, 4)));
    std::mt19937_64 rng(0xACCE5505);
    for (const Ladder& lad : testutil::random_ladders(0xACCE5505, 120, 6)) {
        if (family.size() >= 30) break;
        if (lad.size() > 15) continue;
        family.push_back(normalize(testutil::random_ideal(rng, lad, 3)));
    }
    for (const MixedLadderIdeal& ideal : family) {
        for (const BiliaisonStep& step : descend_chain(ideal).steps) {
            if (!two_sided_identity_ok(step.source, step.pivot_k))
                out.fail("round trip broke a variable on " + ideal_key(step.source));
            ++instances;
        }
    }
    if (instances < 10) out.fail("only " + std::to_string(instances) + " instances");
    out.tail = "localization maps invert exactly on both sides (" + std::to_string(instances) +
               " instances)";
    return out;
}

// 6: random structural properties of ladders, ideals, and descent steps
Outcome criterion6() {
    Outcome out;
    int cases = 0;
    std::mt19937_64 rng(0xACCE5506);

    for (const Ladder& lad : testutil::random_ladders(0xACCE5506, 150, 7)) {
        // brute-force closure and corner maximality
        bool closed = true;
        for (const Cell& a : lad.cells())
            for (const Cell& b : lad.cells())
                if (a.i < b.i && a.j > b.j) closed = closed && lad.contains({a.i, b.j});
        if (!closed) out.fail("closure violated after validation");
        for (const Cell& c : corners(lad).upper_outside)
            for (const Cell& d : lad.cells())
                if (!(d == c) && d.i >= c.i && d.j >= c.j)
                    out.fail("non-maximal upper outside corner");
        ++cases;

        const MixedLadderIdeal raw = testutil::random_ideal(rng, lad, 3);
        const MixedLadderIdeal norm = normalize(raw);
        if (!(normalize(norm) == norm)) out.fail("normalize is not idempotent");
        const HeightProfile profile = h_plus(norm);
        if (static_cast<int>(profile.h_plus.size()) != profile.height)
            out.fail("height does not count its own support");
        for (const Cell& c : profile.h_plus)
            if (!norm.ladder().contains(c)) out.fail("height support leaves the ladder");
        ++cases;

        // generator shape: strictly increasing indices, entries in the ladder
        for (const Minor& m : enumerate_generators(norm)) {
            if (m.rows.size() != m.cols.size() || m.rows.empty()) out.fail("ragged minor");
            for (std::size_t i = 1; i < m.rows.size(); ++i)
                if (m.rows[i] <= m.rows[i - 1] || m.cols[i] <= m.cols[i - 1])
                    out.fail("minor indices not increasing");
            for (int a : m.rows)
                for (int b : m.cols)
                    if (!norm.ladder().contains({a, b})) out.fail("minor entry outside ladder");
        }
        ++cases;

        // one descent step: hook removal and height bookkeeping
        const std::optional<int> k = pivot(norm);
        if (k.has_value()) {
            const BiliaisonStep step = descend_step(norm);
            const std::vector<Cell> deleted = deleted_cells_at(norm, step.pivot_k);
            CellSet expect;
            for (const Cell& c : norm.ladder().cells()) expect.insert(c);
            for (const Cell& c : deleted) expect.erase(c);
            CellSet got;
            for (const Cell& c : step.target.ladder().cells()) got.insert(c);
            if (!(expect == got)) out.fail("target ladder is not source minus the hook");
            const int h = h_plus(norm).height;
            if (h_plus(step.target).height != h) out.fail("target height moved");
            if (h_plus(step.link).height != h - 1) out.fail("link height is not one lower");
            if (step.f_numerator.size() + 1 != step.f_denominator.size())
                out.fail("ratio minors have wrong sizes");
            ++cases;
        }
    }
    if (cases < 500) out.fail("only " + std::to_string(cases) + " cases exercised");
    out.tail = "random structural properties (" + std::to_string(cases) + " cases)";
    return out;
}

// 7: corrupted certificate steps are rejected with witnesses
Outcome criterion7() {
    Outcome out;
    const BiliaisonStep good = descend_chain(mk_ideal(full(3), {{3, 3}}, {2})).steps.front();
    const BiliaisonStep classical_step = descend_chain(classical(4, 3)).steps.front();
    const BiliaisonStep two_point =
        descend_chain(mk_ideal(full(4), {{2, 4}, {4, 4}}, {1, 2})).steps.front();

    std::vector<std::pair<std::string, BiliaisonStep>> corrupted;
    {
        BiliaisonStep s = good;
        s.link = mk_ideal(s.link.ladder(), s.link.points(), {1});
        corrupted.emplace_back("shrunken link size", s);
    }
    {
        BiliaisonStep s = good;
        s.target = mk_ideal(s.target.ladder(), s.target.points(), {2});
        corrupted.emplace_back("inflated target size", s);
    }
    {
        BiliaisonStep s = good;
        s.f_denominator = Minor{{1, 3}, {1, 3}};
        corrupted.emplace_back("swapped denominator minor", s);
    }
    {
        BiliaisonStep s = classical_step;
        s.f_numerator = Minor{{1}, {1}};
        corrupted.emplace_back("swapped numerator minor", s);
    }
    {
        BiliaisonStep s = good;
        s.pivot_k = 7;
        corrupted.emplace_back("pivot index out of range", s);
    }
    {
        BiliaisonStep s = two_point;
        s.pivot_k = 1;
        corrupted.emplace_back("pivot at a size-one point", s);
    }

    int rejected = 0;
    for (const auto& [label, step] : corrupted) {
        const VerificationReport report = verify_step(step, 1, {false, kPrime});
        bool caught = false;
        for (const CheckResult& check : report.checks)
            caught = caught || (check.status == CheckStatus::fail && !check.witness.empty());
        if (caught)
            ++rejected;
        else
            out.fail("corruption not caught: " + label);
    }
    if (rejected < 5) out.fail("only " + std::to_string(rejected) + " corruptions rejected");
    out.tail = "corrupted certificates rejected with witnesses (" + std::to_string(rejected) +
               " of " + std::to_string(corrupted.size()) + ")";
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    failures += !report(1, criterion1());
    failures += !report(2, criterion2());
    failures += !report(3, criterion3());
    failures += !report(4, criterion4());
    failures += !report(5, criterion5());
    failures += !report(6, criterion6());
    failures += !report(7, criterion7());
    return failures;
}
