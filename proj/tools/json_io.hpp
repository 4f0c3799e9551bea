#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "symladder/biliaison.hpp"
#include "symladder/height.hpp"
#include "symladder/verify.hpp"

namespace symladder::io {

using jsonv = nlohmann::ordered_json;

// A document whose JSON shape is wrong (missing keys, wrong types, both or
// neither ladder body form).  Distinct from SymladderError so the CLI can
// separate malformed input from a well-formed document that fails the
// mathematical validation.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ladder document: { "n": ..., "cells": [[i,j],...] } or
// { "n": ..., "lower_inside": [[a,b],...], "upper_inside": [[c,d],...] };
// exactly one body form, 1-based indices.
Ladder ladder_from_json(const jsonv& j);

// Ideal document: { "ladder": <ladder doc>, "points": [[v,w],...], "t": [...] }.
MixedLadderIdeal ideal_from_json(const jsonv& j);

Minor minor_from_json(const jsonv& j);
BiliaisonCertificate certificate_from_json(const jsonv& j);

// Emission is canonical: cells sorted, insertion-ordered keys.
jsonv ladder_to_json(const Ladder& lad);
jsonv ideal_to_json(const MixedLadderIdeal& ideal);
jsonv minor_to_json(const Minor& m);
jsonv height_to_json(const HeightProfile& h);
jsonv step_to_json(const BiliaisonStep& step);
jsonv certificate_to_json(const BiliaisonCertificate& cert);
jsonv report_to_json(const VerificationReport& report);

// { "minors": [ {"rows":[...],"cols":[...]} ] }; with expand, each minor
// gains a "poly" field holding its canonical polynomial text.
jsonv generators_to_json(const MixedLadderIdeal& ideal, bool expand);

}  // namespace symladder::io
