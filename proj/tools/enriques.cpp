// Command-line front end: classify half decompositions, enumerate
// Morse derivatives, compute monodromy groups, canonicalize scheme
// notations, and verify the embedded catalog.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _WIN32
#include <io.h>
#define ENRIQUES_ISATTY(fd) _isatty(fd)
#else
#include <unistd.h>
#define ENRIQUES_ISATTY(fd) isatty(fd)
#endif

#include "enriques/catalog.hpp"
#include "enriques/errors.hpp"
#include "enriques/monodromy.hpp"
#include "enriques/morse.hpp"
#include "enriques/perm.hpp"
#include "enriques/real_scheme.hpp"
#include "enriques/root_scheme.hpp"
#include "enriques/surface.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotInCatalog = 2;
constexpr int kExitValidation = 3;

struct Options {
    std::string format = "table";
    std::string catalog_path;
    std::string color = "auto";

    bool use_color() const {
        return color == "auto" && ENRIQUES_ISATTY(fileno(stdout));
    }

    const enriques::Catalog& catalog(std::optional<enriques::Catalog>& storage) const {
        if (catalog_path.empty()) return enriques::embedded_default();
        storage = enriques::load_catalog(catalog_path);
        return *storage;
    }
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string group_line(const enriques::GroupReport& r) {
    std::string out = r.id.name;
    if (auto alias = enriques::classical_alias(r.id)) out += " (= " + *alias + ")";
    out += ", order " + std::to_string(r.group.order());
    if (!r.group.generators().empty()) {
        out += ", generators";
        for (const auto& g : r.group.generators()) out += " " + g.cycle_text();
    }
    return out;
}

ordered_json half_json(const enriques::Half& h) {
    ordered_json j;
    j["text"] = h.text();
    j["components"] = h.size();
    if (const auto m = h.min_euler())
        j["min_euler"] = *m;
    else
        j["min_euler"] = nullptr;
    j["total_betti"] = h.total_betti();
    return j;
}

int run_classify(const Options& opt, const std::string& h1, const std::string& h2) {
    const enriques::HalfDecomposition d{enriques::parse_half(h1), enriques::parse_half(h2)};
    const enriques::Kind kind = surface_kind(d);
    if (opt.format == "json") {
        ordered_json j;
        j["kind"] = std::string(to_string(kind));
        j["half1"] = half_json(d.half1);
        j["half2"] = half_json(d.half2);
        print_json(j);
        return kExitOk;
    }
    std::cout << "kind: " << to_string(kind) << "\n";
    for (int i = 1; i <= 2; ++i) {
        const enriques::Half& h = i == 1 ? d.half1 : d.half2;
        std::cout << "half" << i << ": " << h.text() << "  (components " << h.size();
        if (const auto m = h.min_euler()) std::cout << ", min chi " << *m;
        std::cout << ", total betti " << h.total_betti() << ")\n";
    }
    return kExitOk;
}

int run_derive(const Options& opt, const std::string& h1, const std::string& h2) {
    const enriques::HalfDecomposition root{enriques::parse_half(h1), enriques::parse_half(h2)};
    const enriques::DerivativeDag dag = derive_dag(root);
    if (opt.format == "dot") {
        std::cout << dag.to_dot();
        return kExitOk;
    }
    if (opt.format == "json") {
        print_json(dag.to_json());
        return kExitOk;
    }
    std::cout << "half1 (frozen): " << root.half1.text() << "\n";
    std::cout << "nodes: " << dag.nodes.size() << "\n";
    for (std::size_t i = 0; i < dag.nodes.size(); ++i)
        std::cout << "  n" << i << ": " << dag.nodes[i].half2.text() << "\n";
    std::cout << "edges: " << dag.edges.size() << "\n";
    for (const auto& e : dag.edges)
        std::cout << "  n" << e.from << " -> n" << e.to << "  " << e.step.text() << "\n";
    return kExitOk;
}

int run_monodromy(const Options& opt, const std::string& h1, const std::string& h2) {
    const enriques::HalfDecomposition d{enriques::parse_half(h1), enriques::parse_half(h2)};
    std::optional<enriques::Catalog> storage;
    const auto& catalog = opt.catalog(storage);
    const enriques::MonodromyResult r = monodromy_group(d, catalog);
    if (opt.format == "json") {
        print_json(r.to_json());
        return kExitOk;
    }
    std::cout << "family: " << to_string(r.family) << "\n";
    std::cout << "half1: " << d.half1.text() << "  " << group_line(r.half1) << "\n";
    std::cout << "half2: " << d.half2.text() << "  " << group_line(r.half2) << "\n";
    std::cout << "exceptional: " << (r.exceptional ? "yes" : "no") << "\n";
    if (r.quarter_partition) {
        std::cout << "quarters on half2:";
        for (const auto& block : r.quarter_partition->blocks()) {
            std::cout << " [";
            for (std::size_t i = 0; i < block.size(); ++i)
                std::cout << (i ? " " : "") << block[i];
            std::cout << "]";
        }
        std::cout << "\n";
    }
    for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
    return kExitOk;
}

int run_scheme(const Options& opt, const std::string& op, const std::string& text,
               const std::string& text2) {
    using enriques::Scheme;
    if (op == "parse" || op == "canon") {
        const Scheme s = enriques::parse_scheme(text);
        const std::string canon = canonical_text(s);
        if (op == "canon" && opt.format != "json") {
            std::cout << canon << "\n";
            return kExitOk;
        }
        const bool plane = std::holds_alternative<enriques::OvalForest>(s);
        if (opt.format == "json") {
            ordered_json j;
            j["type"] = plane ? "plane" : "sigma2";
            j["canonical"] = canon;
            if (plane) {
                const auto& f = std::get<enriques::OvalForest>(s);
                j["ovals"] = f.oval_count();
                j["one_sided"] = f.has_j();
            } else {
                const auto& z = std::get<enriques::Sigma2Scheme>(s);
                j["ovals"] = z.oval_count();
                j["zones"] = z.zones().size();
                j["bars"] = z.bars();
            }
            print_json(j);
            return kExitOk;
        }
        std::cout << "type: " << (plane ? "plane" : "sigma2") << "\n";
        std::cout << "canonical: " << canon << "\n";
        if (plane) {
            const auto& f = std::get<enriques::OvalForest>(s);
            std::cout << "ovals: " << f.oval_count() << "\n";
            if (f.has_j()) std::cout << "one-sided component: yes\n";
        } else {
            const auto& z = std::get<enriques::Sigma2Scheme>(s);
            std::cout << "ovals: " << z.oval_count() << ", zones: " << z.zones().size()
                      << ", bars: " << z.bars() << "\n";
        }
        return kExitOk;
    }
    // equiv
    const Scheme a = enriques::parse_scheme(text);
    const Scheme b = enriques::parse_scheme(text2);
    bool equivalent = false;
    if (std::holds_alternative<enriques::Sigma2Scheme>(a) &&
        std::holds_alternative<enriques::Sigma2Scheme>(b)) {
        equivalent = reversal_equivalent(std::get<enriques::Sigma2Scheme>(a),
                                         std::get<enriques::Sigma2Scheme>(b));
    } else if (std::holds_alternative<enriques::OvalForest>(a) &&
               std::holds_alternative<enriques::OvalForest>(b)) {
        equivalent = std::get<enriques::OvalForest>(a) == std::get<enriques::OvalForest>(b);
    }
    if (opt.format == "json") {
        ordered_json j;
        j["equivalent"] = equivalent;
        print_json(j);
    } else {
        std::cout << (equivalent ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int run_rootscheme(const Options& opt, const std::string& op, const std::string& text) {
    const enriques::RootScheme s = enriques::parse_root_scheme(text);
    if (op == "canon") {
        if (opt.format == "json") {
            ordered_json j;
            j["canonical"] = canonical_form(s).text();
            print_json(j);
        } else {
            std::cout << canonical_form(s).text() << "\n";
        }
        return kExitOk;
    }
    // sym
    const enriques::SchemeSymmetries sym = symmetry_group(s);
    const enriques::GroupId id = identify(sym.segment_group);
    if (opt.format == "json") {
        ordered_json j;
        j["canonical"] = canonical_form(s).text();
        j["cycle_length"] = s.length();
        auto syms = ordered_json::array();
        for (const auto& c : sym.symmetries) syms.push_back(c.text());
        j["symmetries"] = std::move(syms);
        j["segment_group"] = group_to_json(sym.segment_group, id);
        print_json(j);
        return kExitOk;
    }
    std::cout << "canonical: " << canonical_form(s).text() << "\n";
    std::cout << "cycle length: " << s.length() << ", segments: " << s.segment_count() << "\n";
    std::cout << "symmetries (" << sym.symmetries.size() << "):";
    for (const auto& c : sym.symmetries) std::cout << " " << c.text();
    std::cout << "\n";
    std::cout << "segment group: " << group_line({sym.segment_group, id}) << "\n";
    return kExitOk;
}

int run_verify(const Options& opt) {
    std::optional<enriques::Catalog> storage;
    const auto& catalog = opt.catalog(storage);
    const enriques::VerifyReport report = verify_catalog(catalog);
    if (opt.format == "json") {
        print_json(report.to_json());
    } else {
        const bool color = opt.use_color();
        for (const auto& e : report.entries) {
            const char* tag = e.pass ? "PASS" : "FAIL";
            if (color)
                std::cout << (e.pass ? "\x1b[32m" : "\x1b[31m") << tag << "\x1b[0m";
            else
                std::cout << tag;
            std::cout << "  " << e.description << " (" << e.details << ")\n";
        }
        std::cout << report.entries.size() - report.failures() << "/" << report.entries.size()
                  << " checks passed\n";
    }
    if (!report.all_pass()) {
        std::cerr << "E_VALIDATION: " << report.failures() << " catalog check(s) failed\n";
        return kExitValidation;
    }
    return kExitOk;
}

int run_catalog_dump(const Options& opt) {
    std::optional<enriques::Catalog> storage;
    const auto& catalog = opt.catalog(storage);
    std::cout << catalog_text(catalog);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy groups of real Enriques surfaces of hyperbolic type"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "dot"}))
        ->capture_default_str();
    app.add_option("--catalog", opt.catalog_path, "Catalog file (default: embedded)");
    app.add_option("--color", opt.color, "Colorize table output")
        ->check(CLI::IsMember({"auto", "never"}))
        ->capture_default_str();

    std::string half1, half2;
    auto* classify = app.add_subcommand("classify", "Kind and numeric invariants of a decomposition");
    classify->add_option("--half1", half1, "Distinguished half, e.g. \"V3\"")->required();
    classify->add_option("--half2", half2, "Other half, e.g. \"V1 + 4S\"")->required();

    auto* derive = app.add_subcommand("derive", "Morse-simplification derivatives of half2");
    derive->add_option("--half1", half1)->required();
    derive->add_option("--half2", half2)->required();

    auto* monodromy = app.add_subcommand("monodromy", "Realized component permutation groups");
    monodromy->add_option("--half1", half1)->required();
    monodromy->add_option("--half2", half2)->required();

    std::string op, text, text2;
    auto* scheme = app.add_subcommand("scheme", "Real-scheme notation tools");
    scheme->add_option("op", op, "parse | canon | equiv")
        ->required()
        ->check(CLI::IsMember({"parse", "canon", "equiv"}));
    scheme->add_option("text", text, "Scheme text, e.g. \"<1<1>>\"")->required();
    scheme->add_option("text2", text2, "Second scheme (equiv only)");

    auto* rootscheme = app.add_subcommand("rootscheme", "Root-scheme notation tools");
    rootscheme->add_option("op", op, "sym | canon")
        ->required()
        ->check(CLI::IsMember({"sym", "canon"}));
    rootscheme->add_option("text", text, "Root scheme, e.g. \"([] . [] .)\"")->required();

    auto* verify = app.add_subcommand("verify", "Recompute every cataloged group claim");
    auto* dump = app.add_subcommand("catalog-dump", "Print the loaded catalog file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E_USAGE: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opt.format == "dot" && !derive->parsed()) {
        std::cerr << "E_USAGE: --format dot is only valid for 'derive'\n";
        return kExitUsage;
    }
    if (scheme->parsed() && op == "equiv" && text2.empty()) {
        std::cerr << "E_USAGE: 'scheme equiv' needs two scheme arguments\n";
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(opt, half1, half2);
        if (derive->parsed()) return run_derive(opt, half1, half2);
        if (monodromy->parsed()) return run_monodromy(opt, half1, half2);
        if (scheme->parsed()) return run_scheme(opt, op, text, text2);
        if (rootscheme->parsed()) return run_rootscheme(opt, op, text);
        if (verify->parsed()) return run_verify(opt);
        if (dump->parsed()) return run_catalog_dump(opt);
    } catch (const enriques::NotInCatalogError& e) {
        std::cerr << "E_NOT_IN_CATALOG: " << e.what() << "\n";
        return kExitNotInCatalog;
    } catch (const enriques::ParseError& e) {
        std::cerr << "E_VALIDATION: " << e.what() << "\n";
        return kExitValidation;
    } catch (const enriques::ValidationError& e) {
        std::cerr << "E_VALIDATION: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
