#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symladder/biliaison.hpp"
#include "symladder/groebner.hpp"

namespace symladder {

enum class CheckStatus { pass, fail, skipped };

// One line of a step report.  A failing membership check carries the
// offending polynomial in canonical text form; a skipped check carries the
// resource bound that stopped it.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string witness;  // empty iff status == pass

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Coefficient field for the oracle.  Default is the prime field: rational
// coefficients are exact but grow quickly under elimination.
struct FieldChoice {
    bool use_rationals = false;
    std::uint64_t prime = 32003;
};

struct VerificationReport {
    int step_index = 0;  // 1-based position in the certificate
    std::string field_label;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    bool any_failed() const;
    bool any_skipped() const;
};

// Runs the full check battery on one descent step:
//   inclusion_J_in_I, inclusion_J_in_Iprime   link generators reduce to zero
//   congruence_identity                       f_num*g = f_den*[rows-v;cols-w]
//                                             modulo the link, for every
//                                             generator through the pivot
//   ideal_equality_D1I_D2Iprime               f_num*I + J = f_den*I' + J
//   localization_phi                          forward images of source
//                                             generators fall in the target
//                                             ideal with the pivot variable
//                                             inverted
//   localization_psi_phi_identity             backward after forward fixes
//                                             every variable
//   height_oracle_I/Iprime/J                  combinatorial heights match
//                                             num_vars - krull_dimension
// Structural defects (bad pivot index, cells outside the source ring,
// unnormalized ideals) fail the affected checks with the diagnostic as
// witness; resource cap hits mark them skipped instead.
VerificationReport verify_step(const BiliaisonStep& step, int step_index,
                               const FieldChoice& field = {}, const GroebnerBounds& bounds = {});

// verify_step over every step of the certificate, step_index running 1..N.
std::vector<VerificationReport> verify_chain(const BiliaisonCertificate& cert,
                                             const FieldChoice& field = {},
                                             const GroebnerBounds& bounds = {});

}  // namespace symladder
