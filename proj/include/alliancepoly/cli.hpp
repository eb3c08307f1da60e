#ifndef ALLIANCEPOLY_CLI_HPP
#define ALLIANCEPOLY_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/characterize.hpp"
#include "alliancepoly/closed_forms.hpp"
#include "alliancepoly/compare.hpp"
#include "alliancepoly/derived.hpp"
#include "alliancepoly/enumerate.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/families.hpp"
#include "alliancepoly/graph.hpp"
#include "alliancepoly/io.hpp"
#include "alliancepoly/poly_props.hpp"

namespace alliancepoly {
namespace cli {

struct Input {
    enum class Kind { Family, Named, Edges, G6, Poly };
    Kind kind;
    std::string value;
};

struct Options {
    std::vector<std::string> family, named, edges, g6, poly;
    std::string which = "da";
    std::string key = "A";
    std::string format = "text";
    std::string errata = "corrected";
    std::uint64_t guard = 50'000'000;
    bool parallel = false;
    int iso_limit = kDefaultIsoLimit;
    std::string corpus;
    std::string family_positional;

    EnumConfig enum_config() const {
        EnumConfig cfg;
        cfg.max_subgraphs = guard;
        cfg.parallel = parallel;
        return cfg;
    }

    std::vector<Input> inputs() const {
        std::vector<Input> list;
        for (const auto& v : family) list.push_back({Input::Kind::Family, v});
        for (const auto& v : named) list.push_back({Input::Kind::Named, v});
        for (const auto& v : edges) list.push_back({Input::Kind::Edges, v});
        for (const auto& v : g6) list.push_back({Input::Kind::G6, v});
        for (const auto& v : poly) list.push_back({Input::Kind::Poly, v});
        return list;
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline Graph load_graph(const Input& input) {
    switch (input.kind) {
        case Input::Kind::Family:
            return make_family(parse_family_spec(input.value));
        case Input::Kind::Named:
            return named_graph(input.value);
        case Input::Kind::Edges:
            return read_edge_list_file(input.value);
        case Input::Kind::G6:
            return parse_graph6(input.value);
        case Input::Kind::Poly:
            throw DomainError("a polynomial input has no underlying graph");
    }
    throw InternalError("unhandled input kind");
}

// da of the input: enumerated for graphs, loaded for polynomial JSON
inline BiPoly load_da(const Input& input, const EnumConfig& cfg) {
    if (input.kind == Input::Kind::Poly) {
        return bipoly_from_json(read_file(input.value));
    }
    return defensive_alliance_polynomial(load_graph(input), cfg);
}

inline void render_poly_text(std::ostream& out, const BiPoly& p) {
    out << to_canonical_text(p) << "\n";
}

inline void cmd_poly(const Options& opt, std::ostream& out) {
    auto inputs = opt.inputs();
    if (inputs.size() != 1) {
        throw ParseError("poly expects exactly one input source");
    }
    EnumConfig cfg = opt.enum_config();
    BiPoly da = load_da(inputs[0], cfg);
    bool json = opt.format == "json";
    if (opt.which == "da") {
        if (json) {
            out << to_json(da, static_cast<int>(order_of(da))) << "\n";
        } else {
            render_poly_text(out, da);
        }
        return;
    }
    UniPoly derived(UniPoly::Var::X);
    if (opt.which == "A") {
        derived = alliance_polynomial(da);
    } else if (opt.which == "a") {
        derived = strong_alliance_polynomial(da, static_cast<int>(order_of(da)));
    } else {
        derived = induced_connected_subgraph_polynomial(da);
    }
    if (json) {
        out << to_json(derived) << "\n";
    } else {
        out << to_canonical_text(derived) << "\n";
    }
}

inline void cmd_props(const Options& opt, std::ostream& out) {
    auto inputs = opt.inputs();
    if (inputs.size() != 1) {
        throw ParseError("props expects exactly one input source");
    }
    BiPoly da = load_da(inputs[0], opt.enum_config());
    PropertyProfile profile = property_profile(da);
    if (opt.format == "json") {
        out << to_json(profile) << "\n";
        return;
    }
    out << "order: " << profile.order << "\n";
    out << "size: " << profile.size << "\n";
    out << "connected: " << (profile.connected ? "true" : "false") << "\n";
    out << "degrees: {";
    for (std::size_t i = 0; i < profile.degrees.size(); ++i) {
        if (i) out << ",";
        out << profile.degrees[i];
    }
    out << "}\n";
    if (profile.cut_vertices) {
        out << "cut_vertices: " << *profile.cut_vertices << "\n";
    } else {
        out << "cut_vertices: none\n";
    }
    out << "max_component: order " << profile.max_component_order << ", count "
        << profile.max_component_count.str() << "\n";
    out << "k3: " << profile.k3.str() << "\n";
    out << "s32: " << profile.s32.str() << "\n";
    out << "s33: " << profile.s33.str() << "\n";
    auto regular = regular_degree(da);
    if (regular) {
        out << "regular: " << *regular << "\n";
    } else {
        out << "regular: none\n";
    }
}

inline void cmd_identify(const Options& opt, std::ostream& out) {
    auto inputs = opt.inputs();
    if (inputs.size() != 1) {
        throw ParseError("identify expects exactly one input source");
    }
    EnumConfig cfg = opt.enum_config();
    BiPoly da = load_da(inputs[0], cfg);
    std::vector<FamilyMatch> matches = identify_families(da, cfg);
    if (opt.format == "json") {
        out << to_json(da, matches) << "\n";
        return;
    }
    if (matches.empty()) {
        out << "no family matches\n";
        return;
    }
    for (const FamilyMatch& m : matches) {
        out << m.spec.to_string() << " (" << evidence_name(m.evidence) << ")\n";
    }
}

inline void cmd_compare(const Options& opt, std::ostream& out) {
    auto inputs = opt.inputs();
    if (inputs.size() != 2) {
        throw ParseError("compare expects exactly two inputs");
    }
    Graph g = load_graph(inputs[0]);
    Graph h = load_graph(inputs[1]);
    CompareReport report =
        compare_graphs(g, h, opt.enum_config(), opt.iso_limit);
    if (opt.format == "json") {
        out << to_json(report) << "\n";
        return;
    }
    out << "da_equal: " << (report.da_equal ? "true" : "false") << "\n";
    out << "A_equal: " << (report.A_equal ? "true" : "false") << "\n";
    out << "q_equal: " << (report.q_equal ? "true" : "false") << "\n";
    out << "a_equal: " << (report.a_equal ? "true" : "false") << "\n";
    out << "isomorphic: ";
    if (report.isomorphic) {
        out << (*report.isomorphic ? "true" : "false");
    } else {
        out << "unknown";
    }
    out << "\n";
}

inline void cmd_scan(const Options& opt, std::ostream& out) {
    std::vector<CorpusEntry> corpus = load_corpus_path(opt.corpus);
    PolyKey key = PolyKey::A;
    if (opt.key == "da") key = PolyKey::Da;
    else if (opt.key == "A") key = PolyKey::A;
    else if (opt.key == "q") key = PolyKey::Q;
    ScanReport report =
        scan_corpus(corpus, key, opt.enum_config(), opt.iso_limit);
    if (opt.format == "json") {
        out << to_json(report) << "\n";
    } else {
        out << to_summary_table(report);
    }
}

inline void cmd_family(const Options& opt, std::ostream& out,
                       std::ostream& err) {
    std::string spec_text = opt.family_positional;
    if (spec_text.empty() && opt.family.size() == 1) spec_text = opt.family[0];
    if (spec_text.empty()) {
        throw ParseError("family expects a family spec, e.g. complete:5");
    }
    FamilySpec spec = parse_family_spec(spec_text);
    ErrataMode mode = opt.errata == "paper" ? ErrataMode::PaperLiteral
                                            : ErrataMode::Corrected;
    Fingerprint fp = closed_form(spec, mode);
    if (mode == ErrataMode::PaperLiteral && spec.family == Family::Star) {
        err << "note: paper-literal star form is a documented erratum"
               " and does not match enumeration\n";
    }
    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["family"] = spec.to_string();
        doc["errata"] = mode == ErrataMode::PaperLiteral ? "paper_literal"
                                                         : "corrected";
        if (fp.kind() == Fingerprint::Kind::Full) {
            doc["kind"] = "full";
            doc["poly"] = nlohmann::ordered_json::parse(to_json(fp.poly()));
        } else {
            doc["kind"] = "slice";
            doc["slices"] = nlohmann::ordered_json::array();
            for (const SliceConstraint& sc : fp.constraints()) {
                doc["slices"].push_back(
                    {{"x", sc.x_power},
                     {"poly", nlohmann::ordered_json::parse(
                                  to_json(sc.expected))}});
            }
        }
        out << doc.dump() << "\n";
        return;
    }
    if (fp.kind() == Fingerprint::Kind::Full) {
        render_poly_text(out, fp.poly());
    } else {
        for (const SliceConstraint& sc : fp.constraints()) {
            out << "[x^" << sc.x_power
                << "] = " << to_canonical_text(sc.expected) << "\n";
        }
    }
}

inline std::uint64_t guard_from_env() {
    const char* env = std::getenv("ALLIANCEPOLY_GUARD");
    if (!env) return 50'000'000;
    std::string text(env);
    if (text.empty() || text.size() > 19) {
        throw ParseError("ALLIANCEPOLY_GUARD must be a positive integer");
    }
    std::uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw ParseError("ALLIANCEPOLY_GUARD must be a positive integer");
        }
        value = value * 10 + (ch - '0');
    }
    if (value < 1) {
        throw ParseError("ALLIANCEPOLY_GUARD must be a positive integer");
    }
    return value;
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"defensive alliance polynomial toolkit"};
    app.require_subcommand(1);
    cli::Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_inputs) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--guard", opt.guard,
                        "subset-count guard for enumeration")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--parallel", opt.parallel, "enumerate in parallel");
        if (with_inputs) {
            cmd->add_option("--family", opt.family,
                            "family spec, e.g. path:4 or attached:5,2");
            cmd->add_option("--named", opt.named, "named graph G1..G4");
            cmd->add_option("--edges", opt.edges, "edge-list file");
            cmd->add_option("--g6", opt.g6, "graph6 string");
            cmd->add_option("--poly", opt.poly, "polynomial JSON file");
        }
    };

    CLI::App* poly = app.add_subcommand("poly", "compute da, A, a or q");
    add_common(poly, true);
    poly->add_option("--which", opt.which, "da, A, a or q")
        ->check(CLI::IsMember({"da", "A", "a", "q"}));
    poly->callback([&] { cli::cmd_poly(opt, out); });

    CLI::App* props = app.add_subcommand(
        "props", "extract graph invariants from the polynomial");
    add_common(props, true);
    props->callback([&] { cli::cmd_props(opt, out); });

    CLI::App* identify =
        app.add_subcommand("identify", "match against the paper families");
    add_common(identify, true);
    identify->callback([&] { cli::cmd_identify(opt, out); });

    CLI::App* compare = app.add_subcommand("compare", "compare two graphs");
    add_common(compare, true);
    compare->add_option("--iso-limit", opt.iso_limit,
                        "isomorphism backtracking order limit")
        ->check(CLI::PositiveNumber);
    compare->callback([&] { cli::cmd_compare(opt, out); });

    CLI::App* scan = app.add_subcommand(
        "scan", "bucket a corpus by polynomial and report split pairs");
    add_common(scan, false);
    scan->add_option("corpus", opt.corpus,
                     "graph6 file or directory of edge-list files")
        ->required();
    scan->add_option("--key", opt.key, "bucket key: da, A or q")
        ->check(CLI::IsMember({"da", "A", "q"}));
    scan->add_option("--iso-limit", opt.iso_limit,
                     "isomorphism backtracking order limit")
        ->check(CLI::PositiveNumber);
    scan->callback([&] { cli::cmd_scan(opt, out); });

    CLI::App* family = app.add_subcommand(
        "family", "closed-form polynomial without enumeration");
    family->add_option("spec", opt.family_positional,
                       "family spec, e.g. complete:5");
    family->add_option("--family", opt.family, "family spec");
    family->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    family->add_option("--errata", opt.errata,
                       "corrected (default) or paper")
        ->check(CLI::IsMember({"corrected", "paper"}));
    family->callback([&] { cli::cmd_family(opt, out, err); });

    std::vector<const char*> argv;
    argv.push_back("alliancepoly");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        opt.guard = cli::guard_from_env();
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace alliancepoly

#endif
