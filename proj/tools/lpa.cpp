// Command-line front end: enumeration, shift reduction, invariants, atlas
// build, classification, and table emission.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpa/io.hpp"

namespace {

lpa::Graph graph_from_arg(const std::string& path) {
    if (path == "-") return lpa::read_graph(std::cin);
    return lpa::load_graph(path);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw lpa::InputError("cannot open output file: " + path);
    return file;
}

lpa::Atlas atlas_from_arg(const std::string& path) {
    std::string p = path;
    if (p.empty())
        if (const char* env = std::getenv("LPA_ATLAS")) p = env;
    if (p.empty()) return lpa::build_atlas(3);
    std::ifstream in(p);
    if (!in) throw lpa::InputError("cannot open atlas file: " + p);
    lpa::json j = lpa::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw lpa::InputError("malformed atlas JSON: " + p);
    return lpa::atlas_from_json(j);
}

void print_invariants(std::ostream& os, const lpa::InvariantTuple& t) {
    os << "K0:            " << lpa::group_display(t.k0) << "\n";
    os << "Soc:           " << lpa::socle_display(t.soc) << "\n";
    os << "L/Soc:         "
       << (t.l_mod_soc_is_self ? "self"
           : t.l_mod_soc.is_empty() ? "0" : lpa::wire_format(t.l_mod_soc)) << "\n";
    os << "[1] raw:       " << lpa::unit_raw_display(t.unit) << "\n";
    os << "[1] canonical: " << lpa::unit_canonical_display(t.unit) << "\n";
    os << "ILN:           " << t.iln << "\n";
    os << "HS:            " << t.hs << "\n";
    os << "L/I:           " << (t.l_mod_i ? lpa::wire_format(*t.l_mod_i) : "-") << "\n";
    os << "MT3+L:         " << (t.mt3_plus_l ? "T" : "F") << "\n";
    os << "Condition L:   " << (t.condition_L ? "T" : "F") << "\n";
    os << "Condition MT3: " << (t.condition_MT3 ? "T" : "F") << "\n";
    os << "Cofinal:       " << (t.cofinal ? "T" : "F") << "\n";
    os << "Condition NE:  " << (t.condition_NE ? "T" : "F") << "\n";
    os << "det(I-N^t):    " << t.det << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Classification toolkit for Leavitt path algebras of small graphs"};
    app.require_subcommand(1);

    int n = 3, max_n = 3, opt_i = 0, opt_j = 0;
    bool allow_large = false, as_json = false;
    std::string out_path, graph_path, atlas_path, format = "md", out_dir = "tables";

    auto* cmd_count = app.add_subcommand("count-orbits", "Count adjacency matrices up to relabeling");
    cmd_count->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(1, 4));

    auto* cmd_list = app.add_subcommand("list-orbits", "List one canonical matrix per orbit");
    cmd_list->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(1, 5));
    cmd_list->add_option("--out", out_path, "output file (default stdout)");
    cmd_list->add_flag("--allow-large", allow_large, "permit n = 5");

    auto* cmd_reduce = app.add_subcommand("reduce", "Reduce the orbit list under shift moves");
    cmd_reduce->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(1, 4));
    cmd_reduce->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_shift = app.add_subcommand("shift", "Apply one shift move (1-based vertices)");
    cmd_shift->add_option("--i", opt_i, "dominated row (1-based)")->required();
    cmd_shift->add_option("--j", opt_j, "replaced row (1-based)")->required();
    cmd_shift->add_option("graph", graph_path, "graph file or '-' for stdin")->required();

    auto* cmd_inv = app.add_subcommand("invariants", "Compute the invariant system of a graph");
    cmd_inv->add_option("graph", graph_path, "graph file or '-' for stdin")->required();
    cmd_inv->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_classify = app.add_subcommand("classify", "Locate a graph's class in the atlas");
    cmd_classify->add_option("graph", graph_path, "graph file or '-' for stdin")->required();
    cmd_classify->add_option("--atlas", atlas_path, "atlas JSON (default: $LPA_ATLAS or in-process build)");
    cmd_classify->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_atlas = app.add_subcommand("atlas", "Atlas operations");
    cmd_atlas->require_subcommand(1);
    auto* cmd_build = cmd_atlas->add_subcommand("build", "Build the atlas and write it as JSON");
    cmd_build->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(1, 3));
    cmd_build->add_option("--out", out_path, "output file (default stdout)");
    auto* cmd_tables = cmd_atlas->add_subcommand("tables", "Emit the classification tables");
    cmd_tables->add_option("--format", format, "md, csv, or json")->default_str("md");
    cmd_tables->add_option("--out-dir", out_dir, "output directory")->required();
    cmd_tables->add_option("--atlas", atlas_path, "atlas JSON (default: $LPA_ATLAS or in-process build)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (cmd_count->parsed()) {
        const auto b = lpa::burnside_breakdown(n);
        std::cout << b.total << "\n";
        long long order = 0, numer = 0;
        for (const auto& [size, fixed] : b.per_class) {
            std::cout << "  class size " << size << ": " << fixed << " fixed matrices\n";
            order += size;
            numer += size * fixed;
        }
        std::cout << "  (" << numer << " / " << order << ")\n";
    } else if (cmd_list->parsed()) {
        std::ofstream file;
        std::ostream& os = open_out(file, out_path);
        for (const lpa::Graph& g : lpa::orbit_representatives(n, allow_large))
            os << lpa::wire_format(g) << "\n";
    } else if (cmd_reduce->parsed()) {
        std::ofstream file;
        std::ostream& os = open_out(file, out_path);
        for (const lpa::Graph& g : lpa::reduce(lpa::orbit_representatives(n)))
            os << lpa::wire_format(g) << "\n";
    } else if (cmd_shift->parsed()) {
        const lpa::Graph g = graph_from_arg(graph_path);
        if (opt_i < 1 || opt_j < 1 || opt_i > g.size() || opt_j > g.size() || opt_i == opt_j)
            throw lpa::InputError("vertex indices must be distinct and within 1.." +
                                  std::to_string(g.size()));
        auto s = lpa::shift(opt_i - 1, opt_j - 1, g);
        if (!s) std::cout << "inapplicable\n";
        else std::cout << lpa::emit_graph_text(*s);
    } else if (cmd_inv->parsed()) {
        const lpa::Graph g = graph_from_arg(graph_path);
        const lpa::InvariantTuple t = lpa::signature(g);
        if (as_json) std::cout << lpa::invariants_to_json(t).dump(2) << "\n";
        else print_invariants(std::cout, t);
    } else if (cmd_classify->parsed()) {
        const lpa::Graph g = graph_from_arg(graph_path);
        const lpa::Atlas atlas = atlas_from_arg(atlas_path);
        const lpa::ClassifyResult r = lpa::classify(g, atlas);
        const lpa::AtlasClass& cls = atlas.classes[static_cast<std::size_t>(r.class_index)];
        if (as_json) {
            lpa::json j{{"class_id", r.class_id},
                        {"algebra_name", cls.algebra_name ? lpa::json(*cls.algebra_name)
                                                          : lpa::json(nullptr)},
                        {"table_anchor", cls.table_anchor},
                        {"moves", r.moves},
                        {"invariants", lpa::invariants_to_json(r.invariants)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "class:   " << r.class_id << "\n";
            std::cout << "algebra: " << cls.algebra_name.value_or("---") << "\n";
            std::cout << "table:   " << (cls.table_anchor.empty() ? "-" : cls.table_anchor) << "\n";
            for (const std::string& m : r.moves) std::cout << "move:    " << m << "\n";
            print_invariants(std::cout, r.invariants);
        }
    } else if (cmd_build->parsed()) {
        const lpa::Atlas atlas = lpa::build_atlas(max_n);
        std::ofstream file;
        std::ostream& os = open_out(file, out_path);
        os << lpa::atlas_to_json(atlas).dump(2) << "\n";
        for (const std::string& line : atlas.report.lines) std::cerr << line << "\n";
    } else if (cmd_tables->parsed()) {
        const lpa::Atlas atlas = atlas_from_arg(atlas_path);
        std::filesystem::create_directories(out_dir);
        for (const lpa::TableDocument& doc : lpa::emit_tables(atlas, format)) {
            const std::string ext = format == "md" ? ".md" : format == "csv" ? ".csv" : ".json";
            std::ofstream f(std::filesystem::path(out_dir) / (doc.name + ext));
            if (!f) throw lpa::InputError("cannot write into " + out_dir);
            f << doc.content;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lpa::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const lpa::InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    }
}
