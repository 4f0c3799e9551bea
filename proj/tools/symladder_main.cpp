#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "render.hpp"
#include "symladder/errors.hpp"
#include "symladder/height.hpp"
#include "symladder/verify.hpp"

using namespace symladder;

namespace {

// exit codes: 0 ok, 1 malformed input or usage, 2 validation failure,
// 3 verification failure, 4 skipped checks under --strict

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

io::jsonv load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return io::jsonv::parse(in);
}

bool is_ideal_doc(const io::jsonv& j) { return j.is_object() && j.contains("ladder"); }

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("bad " + what + ": " + s);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("bad " + what + ": " + s);
    }
}

// "a..b" inclusive
std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError(what + " must look like a..b");
    return {parse_int(s.substr(0, dots), what), parse_int(s.substr(dots + 2), what)};
}

FieldChoice parse_field(const std::string& s) {
    if (s == "q") return {true, 0};
    if (s.rfind("fp:", 0) == 0) {
        try {
            std::size_t used = 0;
            const unsigned long long p = std::stoull(s.substr(3), &used);
            if (used != s.size() - 3) throw UsageError("bad field spec: " + s);
            return {false, static_cast<std::uint64_t>(p)};
        } catch (const std::logic_error&) {
            throw UsageError("bad field spec: " + s);
        }
    }
    throw UsageError("field must be q or fp:<p>, got " + s);
}

std::string points_str(const std::vector<Point>& pts) {
    if (pts.empty()) return " (none)";
    std::string out;
    for (const Point& p : pts)
        out += " (" + std::to_string(p.v) + "," + std::to_string(p.w) + ")";
    return out;
}

std::string sizes_str(const std::vector<int>& ts) {
    if (ts.empty()) return " (none)";
    std::string out;
    for (int t : ts) out += " " + std::to_string(t);
    return out;
}

void print_info(const MixedLadderIdeal& given) {
    const MixedLadderIdeal norm = normalize(given);
    std::cout << "n: " << given.ladder().n() << "\n";
    std::cout << "ladder cells: " << given.ladder().size() << "\n";
    std::cout << "points:" << points_str(given.points()) << "\n";
    std::cout << "sizes:" << sizes_str(given.sizes()) << "\n";
    if (norm == given) {
        std::cout << "normalized: yes\n";
    } else {
        std::cout << "normalized: no\n";
        std::cout << "normalized points:" << points_str(norm.points()) << "\n";
        std::cout << "normalized sizes:" << sizes_str(norm.sizes()) << "\n";
        std::cout << "normalized ladder cells: " << norm.ladder().size() << "\n";
    }
    std::cout << "height: " << h_plus(norm).height << "\n";
    std::cout << "generators: " << enumerate_generators(norm).size() << "\n";
}

int run_validate(const std::string& file) {
    const io::jsonv doc = load_json(file);
    const Ladder lad =
        is_ideal_doc(doc) ? io::ideal_from_json(doc).ladder() : io::ladder_from_json(doc);
    std::cout << io::ladder_to_json(lad).dump(2) << "\n";
    return 0;
}

int run_render(const std::string& file, bool hplus, bool points) {
    const io::jsonv doc = load_json(file);
    if (!is_ideal_doc(doc)) {
        if (hplus || points)
            throw UsageError("--hplus and --points need an ideal document, not a bare ladder");
        std::cout << io::render_grid(io::ladder_from_json(doc), {}, {});
        return 0;
    }
    const MixedLadderIdeal ideal = io::ideal_from_json(doc);
    std::vector<Cell> overlay, marks;
    if (hplus) overlay = h_plus(normalize(ideal)).h_plus;
    if (points)
        for (const Point& p : ideal.points()) marks.push_back(cell_of(p));
    std::cout << io::render_grid(ideal.ladder(), overlay, marks);
    return 0;
}

int run_info(const std::string& file) {
    print_info(io::ideal_from_json(load_json(file)));
    return 0;
}

int run_gens(const std::string& file, bool expand) {
    const MixedLadderIdeal ideal = io::ideal_from_json(load_json(file));
    std::cout << io::generators_to_json(ideal, expand).dump(2) << "\n";
    return 0;
}

int run_descend(const std::string& file, const std::string& out) {
    const MixedLadderIdeal ideal = io::ideal_from_json(load_json(file));
    const BiliaisonCertificate cert = descend_chain(ideal);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        f << io::certificate_to_json(cert).dump(2) << "\n";
    }
    const std::size_t forms = enumerate_generators(cert.terminal).size();
    std::cout << cert.biliaison_count
              << (cert.biliaison_count == 1 ? " biliaison, " : " biliaisons, ")
              << cert.g_link_count << " G-links, terminal: " << forms
              << (forms == 1 ? " linear form" : " linear forms") << "\n";
    return 0;
}

int run_verify(const std::string& file, const std::string& field_spec, int max_degree,
               const std::string& steps_spec, bool strict) {
    const BiliaisonCertificate cert = io::certificate_from_json(load_json(file));
    const FieldChoice field = parse_field(field_spec);
    GroebnerBounds bounds;
    bounds.max_degree = max_degree;

    int first = 1, last = static_cast<int>(cert.steps.size());
    if (!steps_spec.empty()) {
        const auto [a, b] = parse_range(steps_spec, "--steps");
        if (a < 1 || b < a || b > static_cast<int>(cert.steps.size()))
            throw UsageError("--steps " + steps_spec + " outside 1.." +
                             std::to_string(cert.steps.size()));
        first = a;
        last = b;
    }

    bool failed = false, skipped = false;
    io::jsonv arr = io::jsonv::array();
    for (int i = first; i <= last; ++i) {
        const VerificationReport report =
            verify_step(cert.steps[static_cast<std::size_t>(i) - 1], i, field, bounds);
        failed = failed || report.any_failed();
        skipped = skipped || report.any_skipped();
        arr.push_back(io::report_to_json(report));
    }
    std::cout << arr.dump(2) << "\n";
    if (failed) return 3;
    if (strict && skipped) return 4;
    return 0;
}

int run_cogenerated(const std::string& file, const std::string& alpha_spec) {
    const io::jsonv doc = load_json(file);
    if (is_ideal_doc(doc))
        throw UsageError("cogenerated expects a ladder document, not an ideal document");
    CogeneratedSpec spec;
    std::size_t pos = 0;
    while (pos <= alpha_spec.size()) {
        const auto comma = alpha_spec.find(',', pos);
        const auto end = comma == std::string::npos ? alpha_spec.size() : comma;
        spec.alpha.push_back(parse_int(alpha_spec.substr(pos, end - pos), "--alpha"));
        pos = end + 1;
        if (comma == std::string::npos) break;
    }
    print_info(from_cogenerated(io::ladder_from_json(doc), spec));
    return 0;
}

int run_embed(int m, int n, const std::string& block_spec, int t) {
    const auto comma = block_spec.find(',');
    if (comma == std::string::npos) throw UsageError("--block must look like r1..r2,c1..c2");
    const auto [r1, r2] = parse_range(block_spec.substr(0, comma), "--block rows");
    const auto [c1, c2] = parse_range(block_spec.substr(comma + 1), "--block cols");
    print_info(embed_block_matrix(m, n, {r1, r2}, {c1, c2}, t));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric mixed ladder determinantal ideals"};
    app.require_subcommand(1);

    std::string file, out, steps_spec, alpha_spec, block_spec;
    std::string field_spec = "fp:32003";
    int max_degree = 30, m = 0, n = 0, t = 0;
    bool hplus = false, points = false, expand = false, strict = false;

    CLI::App* validate = app.add_subcommand("validate", "check a ladder and echo canonical JSON");
    validate->add_option("file", file, "ladder or ideal document")->required();

    CLI::App* render = app.add_subcommand("render", "draw the ladder as an ASCII grid");
    render->add_option("file", file, "ladder or ideal document")->required();
    render->add_flag("--hplus", hplus, "overlay the height support");
    render->add_flag("--points", points, "mark the distinguished points");

    CLI::App* info = app.add_subcommand("info", "summarize an ideal document");
    info->add_option("file", file, "ideal document")->required();

    CLI::App* gens = app.add_subcommand("gens", "list the generating minors");
    gens->add_option("file", file, "ideal document")->required();
    gens->add_flag("--expand", expand, "include canonical polynomial text");

    CLI::App* descend = app.add_subcommand("descend", "run the biliaison descent");
    descend->add_option("file", file, "ideal document")->required();
    descend->add_option("--out", out, "write the certificate JSON here");

    CLI::App* verify = app.add_subcommand("verify", "check a descent certificate");
    verify->add_option("file", file, "certificate document")->required();
    verify->add_option("--field", field_spec, "coefficients: q or fp:<p> (default fp:32003)");
    verify->add_option("--max-degree", max_degree, "degree cap for normal forms");
    verify->add_option("--steps", steps_spec, "restrict to steps a..b (1-based)");
    verify->add_flag("--strict", strict, "exit 4 when a check is skipped by bounds");

    CLI::App* cogenerated =
        app.add_subcommand("cogenerated", "build the ideal cogenerated in degree alpha");
    cogenerated->add_option("file", file, "ladder document")->required();
    cogenerated->add_option("--alpha", alpha_spec, "comma-separated row indices")->required();

    CLI::App* embed = app.add_subcommand("embed", "embed a block-symmetric rectangular matrix");
    embed->add_option("--m", m, "rows of the rectangle")->required();
    embed->add_option("--n", n, "columns of the rectangle")->required();
    embed->add_option("--block", block_spec, "symmetric block r1..r2,c1..c2")->required();
    embed->add_option("--t", t, "minor size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(file);
        if (app.got_subcommand(render)) return run_render(file, hplus, points);
        if (app.got_subcommand(info)) return run_info(file);
        if (app.got_subcommand(gens)) return run_gens(file, expand);
        if (app.got_subcommand(descend)) return run_descend(file, out);
        if (app.got_subcommand(verify))
            return run_verify(file, field_spec, max_degree, steps_spec, strict);
        if (app.got_subcommand(cogenerated)) return run_cogenerated(file, alpha_spec);
        if (app.got_subcommand(embed)) return run_embed(m, n, block_spec, t);
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const io::DocumentError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 1;
    } catch (const SymladderError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    }
}
