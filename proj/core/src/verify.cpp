#include "symladder/verify.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "symladder/expand.hpp"
#include "symladder/field.hpp"
#include "symladder/height.hpp"
#include "symladder/localized.hpp"

namespace symladder {

namespace {

// Shared, lazily computed step data.  Accessors recompute on every call after
// a throw, so a resource-bounded piece reports the same way for every check
// that needs it.
template <class F>
struct StepCtx {
    const BiliaisonStep& step;
    const F& field;
    const GroebnerBounds& bounds;
    MonomialOrder o = make_order(MonomialOrder::Kind::degrevlex);
    VarTable vt;
    Point pivot;

    StepCtx(const BiliaisonStep& s, const F& f, const GroebnerBounds& b)
        : step(s),
          field(f),
          bounds(b),
          vt(s.source.ladder()),
          pivot(s.source.points()[static_cast<std::size_t>(s.pivot_k) - 1]) {}

    std::vector<Poly<F>> expand_all(const MixedLadderIdeal& ideal) const {
        std::vector<Poly<F>> out;
        for (const Minor& g : enumerate_generators(ideal))
            out.push_back(expand_minor(g, vt, o, field));
        return out;
    }

    const std::vector<Poly<F>>& gens_source() { return memo(gens_source_, step.source); }
    const std::vector<Poly<F>>& gens_target() { return memo(gens_target_, step.target); }
    const std::vector<Poly<F>>& gens_link() { return memo(gens_link_, step.link); }

    const std::vector<Poly<F>>& gb_source() { return gb(gb_source_, gens_source()); }
    const std::vector<Poly<F>>& gb_target() { return gb(gb_target_, gens_target()); }
    const std::vector<Poly<F>>& gb_link() { return gb(gb_link_, gens_link()); }

    const LocalizationMap& locmap() {
        if (!locmap_) locmap_ = lemma_local_data(step.source, step.pivot_k);
        return *locmap_;
    }

    Poly<F> f_num() const { return expand_minor(step.f_numerator, vt, o, field); }
    Poly<F> f_den() const { return expand_minor(step.f_denominator, vt, o, field); }
    Poly<F> f_pivot() const { return poly_var(vt.id(cell_of(pivot)), field); }

  private:
    const std::vector<Poly<F>>& memo(std::optional<std::vector<Poly<F>>>& slot,
                                     const MixedLadderIdeal& ideal) {
        if (!slot) slot = expand_all(ideal);
        return *slot;
    }

    const std::vector<Poly<F>>& gb(std::optional<std::vector<Poly<F>>>& slot,
                                   const std::vector<Poly<F>>& gens) {
        if (!slot) slot = groebner(gens, o, field, bounds);
        return *slot;
    }

    std::optional<std::vector<Poly<F>>> gens_source_, gens_target_, gens_link_;
    std::optional<std::vector<Poly<F>>> gb_source_, gb_target_, gb_link_;
    std::optional<LocalizationMap> locmap_;
};

// nullopt = pass, string = failure witness; exceptions sorted by type
template <class Fn>
CheckResult run_check(std::string name, Fn&& body) {
    try {
        if (auto witness = body()) return {std::move(name), CheckStatus::fail, *witness};
        return {std::move(name), CheckStatus::pass, ""};
    } catch (const ResourceBound& e) {
        return {std::move(name), CheckStatus::skipped, e.what()};
    } catch (const SymladderError& e) {
        return {std::move(name), CheckStatus::fail, e.what()};
    }
}

template <class F>
std::optional<std::string> first_nonmember(StepCtx<F>& ctx, const std::vector<Poly<F>>& polys,
                                           const std::vector<Poly<F>>& basis) {
    for (const Poly<F>& p : polys)
        if (!reduces_to_zero(p, basis, ctx.o, ctx.field, ctx.bounds))
            return poly_str(p, ctx.vt, ctx.field);
    return std::nullopt;
}

template <class F>
std::optional<std::string> check_congruence(StepCtx<F>& ctx) {
    const int v = ctx.pivot.v, w = ctx.pivot.w;
    const auto has = [](const std::vector<int>& xs, int x) {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
    };
    const Poly<F> num = ctx.f_num(), den = ctx.f_den();
    for (const Minor& g : enumerate_generators(ctx.step.source)) {
        // orient so the pivot row is a row index and the pivot column a
        // column index; generators missing either one satisfy no congruence
        Minor m = g;
        if (!(has(m.rows, v) && has(m.cols, w))) {
            std::swap(m.rows, m.cols);
            if (!(has(m.rows, v) && has(m.cols, w))) continue;
        }
        Minor ab;
        for (int r : m.rows)
            if (r != v) ab.rows.push_back(r);
        for (int c : m.cols)
            if (c != w) ab.cols.push_back(c);
        const Poly<F> diff =
            poly_sub(poly_mul(num, expand_minor(m, ctx.vt, ctx.o, ctx.field), ctx.o, ctx.field),
                     poly_mul(den, expand_minor(ab, ctx.vt, ctx.o, ctx.field), ctx.o, ctx.field),
                     ctx.o, ctx.field);
        if (!reduces_to_zero(diff, ctx.gb_link(), ctx.o, ctx.field, ctx.bounds))
            return poly_str(diff, ctx.vt, ctx.field);
    }
    return std::nullopt;
}

template <class F>
std::optional<std::string> check_ideal_equality(StepCtx<F>& ctx) {
    const Poly<F> num = ctx.f_num(), den = ctx.f_den();
    std::vector<Poly<F>> d1 = ctx.gens_link(), d2 = ctx.gens_link();
    for (const Poly<F>& g : ctx.gens_source()) d1.push_back(poly_mul(num, g, ctx.o, ctx.field));
    for (const Poly<F>& g : ctx.gens_target()) d2.push_back(poly_mul(den, g, ctx.o, ctx.field));
    const auto gb1 = groebner(d1, ctx.o, ctx.field, ctx.bounds);
    const auto gb2 = groebner(d2, ctx.o, ctx.field, ctx.bounds);
    if (auto witness = first_nonmember(ctx, gb1, gb2)) return witness;
    return first_nonmember(ctx, gb2, gb1);
}

template <class F>
std::optional<std::string> check_localization_phi(StepCtx<F>& ctx) {
    VarTable vta = ctx.vt;
    const int y = vta.add_aux("y");
    const Poly<F> f = ctx.f_pivot();
    std::vector<Poly<F>> gens = ctx.gens_target();
    gens.push_back(poly_sub(poly_mul(f, poly_var(y, ctx.field), ctx.o, ctx.field),
                            poly_const(ctx.field.one(), ctx.field), ctx.o, ctx.field));
    const auto gb = groebner(gens, ctx.o, ctx.field, ctx.bounds);
    for (const Poly<F>& g : ctx.gens_source()) {
        const LocalizedPoly<F> image =
            apply_rules(g, ctx.locmap().forward_rules, ctx.vt, f, ctx.o, ctx.field);
        if (!reduces_to_zero(image.num, gb, ctx.o, ctx.field, ctx.bounds))
            return poly_str(g, ctx.vt, ctx.field);
    }
    return std::nullopt;
}

template <class F>
std::optional<std::string> check_psi_phi_identity(StepCtx<F>& ctx) {
    const Poly<F> f = ctx.f_pivot();
    const LocalizationMap& m = ctx.locmap();
    for (const Cell& c : ctx.step.source.ladder().cells()) {
        const Poly<F> x = poly_var(ctx.vt.id(c), ctx.field);
        const LocalizedPoly<F> p = apply_rules(x, m.forward_rules, ctx.vt, f, ctx.o, ctx.field);
        const LocalizedPoly<F> q =
            apply_rules(p.num, m.backward_rules, ctx.vt, f, ctx.o, ctx.field);
        Poly<F> scaled = x;
        for (int e = 0; e < p.denom_pow + q.denom_pow; ++e)
            scaled = poly_mul(scaled, f, ctx.o, ctx.field);
        if (!(q.num == scaled)) return ctx.vt.label(ctx.vt.id(c)) + " is not fixed";
    }
    return std::nullopt;
}

template <class F>
std::optional<std::string> check_height(const MixedLadderIdeal& ideal, const F& field,
                                        const GroebnerBounds& bounds) {
    const VarTable vt(ideal.ladder());
    const MonomialOrder o = make_order(MonomialOrder::Kind::degrevlex);
    std::vector<Poly<F>> gens;
    for (const Minor& g : enumerate_generators(ideal))
        gens.push_back(expand_minor(g, vt, o, field));
    const int codim = vt.count() - krull_dimension(gens, vt.count(), o, field, bounds);
    const int combinatorial = h_plus(ideal).height;
    if (codim != combinatorial)
        return "combinatorial height " + std::to_string(combinatorial) + ", ring codimension " +
               std::to_string(codim);
    return std::nullopt;
}

template <class F>
std::vector<CheckResult> run_battery(const BiliaisonStep& step, const F& field,
                                     const GroebnerBounds& bounds) {
    static const char* const names[] = {
        "inclusion_J_in_I",       "inclusion_J_in_Iprime",
        "congruence_identity",    "ideal_equality_D1I_D2Iprime",
        "localization_phi",       "localization_psi_phi_identity",
        "height_oracle_I",        "height_oracle_Iprime",
        "height_oracle_J",
    };
    if (step.pivot_k < 1 || step.pivot_k > step.source.s()) {
        std::vector<CheckResult> out;
        const std::string why = "pivot index " + std::to_string(step.pivot_k) +
                                " outside 1.." + std::to_string(step.source.s());
        for (const char* name : names) out.push_back({name, CheckStatus::fail, why});
        return out;
    }

    StepCtx<F> ctx(step, field, bounds);
    std::vector<CheckResult> out;
    out.push_back(run_check(names[0], [&] {
        return first_nonmember(ctx, ctx.gens_link(), ctx.gb_source());
    }));
    out.push_back(run_check(names[1], [&] {
        return first_nonmember(ctx, ctx.gens_link(), ctx.gb_target());
    }));
    out.push_back(run_check(names[2], [&] { return check_congruence(ctx); }));
    out.push_back(run_check(names[3], [&] { return check_ideal_equality(ctx); }));
    out.push_back(run_check(names[4], [&] { return check_localization_phi(ctx); }));
    out.push_back(run_check(names[5], [&] { return check_psi_phi_identity(ctx); }));
    out.push_back(run_check(names[6], [&] { return check_height(step.source, field, bounds); }));
    out.push_back(run_check(names[7], [&] { return check_height(step.target, field, bounds); }));
    out.push_back(run_check(names[8], [&] { return check_height(step.link, field, bounds); }));
    return out;
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

bool VerificationReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool VerificationReport::any_skipped() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::skipped; });
}

VerificationReport verify_step(const BiliaisonStep& step, int step_index,
                               const FieldChoice& field, const GroebnerBounds& bounds) {
    VerificationReport report;
    report.step_index = step_index;
    if (field.use_rationals) {
        const RationalField f;
        report.field_label = f.label();
        report.checks = run_battery(step, f, bounds);
    } else {
        const PrimeField f(field.prime);
        report.field_label = f.label();
        report.checks = run_battery(step, f, bounds);
    }
    return report;
}

std::vector<VerificationReport> verify_chain(const BiliaisonCertificate& cert,
                                             const FieldChoice& field,
                                             const GroebnerBounds& bounds) {
    std::vector<VerificationReport> reports;
    for (std::size_t i = 0; i < cert.steps.size(); ++i)
        reports.push_back(verify_step(cert.steps[i], static_cast<int>(i) + 1, field, bounds));
    return reports;
}

}  // namespace symladder
