#include "json_io.hpp"

#include "symladder/expand.hpp"
#include "symladder/field.hpp"

namespace symladder::io {

namespace {

std::vector<Cell> cells_from(const jsonv& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw DocumentError(std::string("expected an array under \"") + key + "\"");
    std::vector<Cell> out;
    for (const jsonv& pair : j[key]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw DocumentError(std::string("\"") + key + "\" entries must be [i,j] pairs");
        out.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return out;
}

std::vector<int> ints_from(const jsonv& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw DocumentError(std::string("expected an array under \"") + key + "\"");
    std::vector<int> out;
    for (const jsonv& v : j[key]) {
        if (!v.is_number_integer())
            throw DocumentError(std::string("\"") + key + "\" entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

int int_from(const jsonv& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DocumentError(std::string("expected an integer under \"") + key + "\"");
    return j[key].get<int>();
}

jsonv pairs_json(const std::vector<Cell>& cells) {
    jsonv arr = jsonv::array();
    for (const Cell& c : cells) arr.push_back(jsonv::array({c.i, c.j}));
    return arr;
}

}  // namespace

Ladder ladder_from_json(const jsonv& j) {
    if (!j.is_object()) throw DocumentError("ladder document must be an object");
    const int n = int_from(j, "n");
    const bool by_cells = j.contains("cells");
    const bool by_corners = j.contains("lower_inside") || j.contains("upper_inside");
    if (by_cells == by_corners)
        throw DocumentError(
            "ladder document needs exactly one body: \"cells\", or "
            "\"lower_inside\"/\"upper_inside\"");
    if (by_cells) return validate_ladder(n, cells_from(j, "cells"));
    return from_corners(n, cells_from(j, "lower_inside"), cells_from(j, "upper_inside"));
}

MixedLadderIdeal ideal_from_json(const jsonv& j) {
    if (!j.is_object() || !j.contains("ladder"))
        throw DocumentError("ideal document must be an object with a \"ladder\"");
    const Ladder lad = ladder_from_json(j["ladder"]);
    std::vector<Point> points;
    for (const Cell& c : cells_from(j, "points")) points.push_back({c.i, c.j});
    return mk_ideal(lad, points, ints_from(j, "t"));
}

Minor minor_from_json(const jsonv& j) {
    if (!j.is_object()) throw DocumentError("minor must be an object");
    return Minor{ints_from(j, "rows"), ints_from(j, "cols")};
}

BiliaisonCertificate certificate_from_json(const jsonv& j) {
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
        throw DocumentError("certificate document must be an object with \"steps\"");
    if (!j.contains("terminal")) throw DocumentError("certificate is missing \"terminal\"");
    std::vector<BiliaisonStep> steps;
    for (const jsonv& s : j["steps"]) {
        if (!s.is_object() || !s.contains("source") || !s.contains("target") ||
            !s.contains("link"))
            throw DocumentError("step needs \"source\", \"target\" and \"link\"");
        steps.push_back(BiliaisonStep{ideal_from_json(s["source"]), ideal_from_json(s["target"]),
                                      ideal_from_json(s["link"]), int_from(s, "pivot_k"),
                                      minor_from_json(s["f_num"]), minor_from_json(s["f_den"]),
                                      1});
    }
    return BiliaisonCertificate{std::move(steps), ideal_from_json(j["terminal"]),
                                int_from(j, "biliaisons"), int_from(j, "g_links")};
}

jsonv ladder_to_json(const Ladder& lad) {
    jsonv j;
    j["n"] = lad.n();
    j["cells"] = pairs_json(lad.cells());
    return j;
}

jsonv ideal_to_json(const MixedLadderIdeal& ideal) {
    jsonv j;
    j["ladder"] = ladder_to_json(ideal.ladder());
    jsonv pts = jsonv::array();
    for (const Point& p : ideal.points()) pts.push_back(jsonv::array({p.v, p.w}));
    j["points"] = pts;
    j["t"] = ideal.sizes();
    return j;
}

jsonv minor_to_json(const Minor& m) {
    jsonv j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    return j;
}

jsonv height_to_json(const HeightProfile& h) {
    jsonv j;
    j["h_plus"] = pairs_json(h.h_plus);
    j["height"] = h.height;
    return j;
}

jsonv step_to_json(const BiliaisonStep& step) {
    jsonv j;
    j["pivot_k"] = step.pivot_k;
    j["source"] = ideal_to_json(step.source);
    j["target"] = ideal_to_json(step.target);
    j["link"] = ideal_to_json(step.link);
    j["f_num"] = minor_to_json(step.f_numerator);
    j["f_den"] = minor_to_json(step.f_denominator);
    j["heights"] = jsonv::array({h_plus(step.source).height, h_plus(step.target).height,
                                 h_plus(step.link).height});
    return j;
}

jsonv certificate_to_json(const BiliaisonCertificate& cert) {
    jsonv j;
    jsonv steps = jsonv::array();
    for (const BiliaisonStep& s : cert.steps) steps.push_back(step_to_json(s));
    j["steps"] = steps;
    j["terminal"] = ideal_to_json(cert.terminal);
    j["biliaisons"] = cert.biliaison_count;
    j["g_links"] = cert.g_link_count;
    return j;
}

jsonv report_to_json(const VerificationReport& report) {
    jsonv j;
    j["step"] = report.step_index;
    j["field"] = report.field_label;
    jsonv checks = jsonv::array();
    for (const CheckResult& c : report.checks) {
        jsonv row;
        row["name"] = c.name;
        row["status"] = c.status == CheckStatus::pass   ? "pass"
                        : c.status == CheckStatus::fail ? "fail"
                                                        : "skipped";
        if (c.witness.empty())
            row["witness"] = nullptr;
        else
            row["witness"] = c.witness;
        checks.push_back(row);
    }
    j["checks"] = checks;
    return j;
}

jsonv generators_to_json(const MixedLadderIdeal& ideal, bool expand) {
    const RationalField field;
    const VarTable vt(ideal.ladder());
    const MonomialOrder o = make_order(MonomialOrder::Kind::degrevlex);
    jsonv arr = jsonv::array();
    for (const Minor& m : enumerate_generators(ideal)) {
        jsonv row = minor_to_json(m);
        if (expand) row["poly"] = poly_str(expand_minor(m, vt, o, field), vt, field);
        arr.push_back(row);
    }
    jsonv j;
    j["minors"] = arr;
    return j;
}

}  // namespace symladder::io
