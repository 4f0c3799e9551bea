#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "symladder/biliaison.hpp"
#include "symladder/errors.hpp"
#include "symladder/height.hpp"
#include "symladder/verify.hpp"

using namespace symladder;

namespace {

Ladder full(int n) { return from_corners(n, {}, {}); }

MixedLadderIdeal classical(int n, int t) { return mk_ideal(full(n), {{n, n}}, {t}); }

const CheckResult& row(const VerificationReport& report, const std::string& name) {
    for (const CheckResult& c : report.checks)
        if (c.name == name) return c;
    REQUIRE(false);
    throw SymladderError("no check named " + name);
}

BiliaisonStep with_link(BiliaisonStep step, MixedLadderIdeal link) {
    step.link = std::move(link);
    return step;
}

}  // namespace

TEST_CASE("full three by three step passes every check") {
    const BiliaisonStep step = descend_step(classical(3, 2));
    for (const bool rationals : {false, true}) {
        const VerificationReport report = verify_step(step, 1, {rationals, 32003});
        CHECK(report.step_index == 1);
        CHECK(report.field_label == (rationals ? "Q" : "Fp:32003"));
        REQUIRE(report.checks.size() == 9);
        CHECK(report.all_passed());
        for (const CheckResult& c : report.checks) CHECK(c.witness.empty());
    }
}

TEST_CASE("chain reports for the classical four by four") {
    const BiliaisonCertificate cert = descend_chain(classical(4, 3));
    const auto reports = verify_chain(cert);
    REQUIRE(reports.size() == 2);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].step_index == static_cast<int>(i) + 1);
        CHECK(reports[i].all_passed());
    }
}

TEST_CASE("two point step passes") {
    const MixedLadderIdeal ideal = mk_ideal(full(4), {{2, 4}, {4, 4}}, {1, 2});
    REQUIRE(is_normalized(ideal));
    const BiliaisonStep step = descend_step(ideal);
    CHECK(step.pivot_k == 2);
    const VerificationReport report = verify_step(step, 1);
    CHECK(report.all_passed());
}

TEST_CASE("embedded rectangle step passes") {
    const BiliaisonStep step = descend_step(embed_block_matrix(2, 3, {2, 2}, {1, 1}, 2));
    CHECK(verify_step(step, 1).all_passed());
}

TEST_CASE("corrupted link size is rejected") {
    const BiliaisonStep good = descend_step(classical(3, 2));
    // drop the link's minor size from 2 to 1: the link becomes the whole
    // coordinate ideal of its quadrant, which the source cannot contain
    const MixedLadderIdeal bad =
        mk_ideal(good.link.ladder(), good.link.points(), {1});
    const VerificationReport report = verify_step(with_link(good, bad), 1);
    CHECK(report.any_failed());
    const CheckResult& inc = row(report, "inclusion_J_in_I");
    CHECK(inc.status == CheckStatus::fail);
    CHECK(!inc.witness.empty());
}

TEST_CASE("corrupted target ideal is rejected") {
    BiliaisonStep step = descend_step(classical(3, 2));
    // inflate the target size: the reported target shrinks to one minor and
    // no longer contains the link
    step.target = mk_ideal(step.target.ladder(), step.target.points(), {2});
    const VerificationReport report = verify_step(step, 1);
    CHECK(report.any_failed());
    CHECK(row(report, "inclusion_J_in_Iprime").status == CheckStatus::fail);
}

TEST_CASE("corrupted denominator minor is rejected") {
    BiliaisonStep step = descend_step(classical(3, 2));
    step.f_denominator = Minor{{1, 3}, {1, 3}};
    const VerificationReport report = verify_step(step, 1);
    CHECK(report.any_failed());
    const bool congruence_or_equality =
        row(report, "congruence_identity").status == CheckStatus::fail ||
        row(report, "ideal_equality_D1I_D2Iprime").status == CheckStatus::fail;
    CHECK(congruence_or_equality);
}

TEST_CASE("out of range pivot index is rejected") {
    BiliaisonStep step = descend_step(classical(3, 2));
    step.pivot_k = 7;
    const VerificationReport report = verify_step(step, 1);
    REQUIRE(report.checks.size() == 9);
    for (const CheckResult& c : report.checks) {
        CHECK(c.status == CheckStatus::fail);
        CHECK(c.witness.find("pivot index") != std::string::npos);
    }
}

TEST_CASE("pivot at a size one point is rejected") {
    const MixedLadderIdeal ideal = mk_ideal(full(4), {{2, 4}, {4, 4}}, {1, 2});
    BiliaisonStep step = descend_step(ideal);
    step.pivot_k = 1;  // points at the size-1 point
    const VerificationReport report = verify_step(step, 1);
    CHECK(report.any_failed());
    CHECK(row(report, "localization_psi_phi_identity").status == CheckStatus::fail);
}

TEST_CASE("tampered numerator minor is rejected") {
    BiliaisonStep step = descend_step(classical(4, 3));
    step.f_numerator = Minor{{1}, {1}};
    const VerificationReport report = verify_step(step, 1);
    CHECK(report.any_failed());
}

TEST_CASE("resource bounds downgrade checks to skipped") {
    const BiliaisonStep step = descend_step(classical(3, 2));
    GroebnerBounds tight;
    tight.max_degree = 1;
    const VerificationReport report = verify_step(step, 1, {}, tight);
    CHECK(!report.any_failed());
    CHECK(report.any_skipped());
    const CheckResult& inc = row(report, "inclusion_J_in_I");
    CHECK(inc.status == CheckStatus::skipped);
    CHECK(!inc.witness.empty());
    // the inverse identity needs no elimination and still passes
    CHECK(row(report, "localization_psi_phi_identity").status == CheckStatus::pass);
}

TEST_CASE("prime and rational verdicts agree") {
    const BiliaisonStep step = descend_step(classical(4, 2));
    const VerificationReport fp = verify_step(step, 1, {false, 65537});
    CHECK(fp.field_label == "Fp:65537");
    const VerificationReport q = verify_step(step, 1, {true, 0});
    REQUIRE(fp.checks.size() == q.checks.size());
    for (std::size_t i = 0; i < fp.checks.size(); ++i) {
        CHECK(fp.checks[i].name == q.checks[i].name);
        CHECK(fp.checks[i].status == q.checks[i].status);
    }
    CHECK(fp.all_passed());
}
