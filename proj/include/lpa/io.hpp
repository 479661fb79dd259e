#ifndef LPA_IO_HPP
#define LPA_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/atlas.hpp"

namespace lpa {

using json = nlohmann::json;

inline constexpr const char* kAtlasVersion = "1";

// --- graph text format -------------------------------------------------------
// Line 1: n. Lines 2..n+1: n space-separated entries in {0,1}.

inline Graph parse_graph_text(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw InputError("expected the vertex count on line 1");
    if (n <= 0) throw EmptyGraphError();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : rows)
        for (auto& cell : row)
            if (!(in >> cell)) throw InputError("truncated adjacency matrix");
    return from_matrix(rows);
}

inline std::string emit_graph_text(const Graph& g) {
    std::string s = std::to_string(g.size()) + "\n";
    for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
            if (j) s += ' ';
            s += static_cast<char>('0' + g.at(i, j));
        }
        s += '\n';
    }
    return s;
}

// --- graph JSON format -------------------------------------------------------
// Object with "n" and "adjacency" (array of arrays).

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("adjacency"))
        throw InputError("graph JSON needs fields \"n\" and \"adjacency\"");
    const int n = j.at("n").get<int>();
    auto rows = j.at("adjacency").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != n)
        throw InputError("\"adjacency\" row count differs from \"n\"");
    return from_matrix(rows);
}

inline json graph_to_json(const Graph& g) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < g.size(); ++i) {
        std::vector<int> r;
        for (int j = 0; j < g.size(); ++j) r.push_back(g.at(i, j));
        rows.push_back(std::move(r));
    }
    return json{{"n", g.size()}, {"adjacency", rows}};
}

// Reads either format; JSON when the first non-space character is '{'.
inline Graph read_graph(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k == std::string::npos) throw InputError("empty graph input");
    if (text[k] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw InputError("malformed graph JSON");
        return graph_from_json(j);
    }
    std::istringstream ts(text);
    return parse_graph_text(ts);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph(in);
}

// --- invariants JSON ---------------------------------------------------------

inline json group_to_json(const AbelianGroup& g) {
    std::vector<std::string> torsion;
    for (const Int& t : g.torsion) torsion.push_back(t.str());
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"display", group_display(g)}};
}

inline AbelianGroup group_from_json(const json& j) {
    AbelianGroup g;
    g.free_rank = j.at("free_rank").get<int>();
    for (const auto& t : j.at("torsion")) g.torsion.push_back(Int(t.get<std::string>()));
    return g;
}

inline json ints_to_json(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const Int& x : v) out.push_back(x.str());
    return json(out);
}

inline std::vector<Int> ints_from_json(const json& j) {
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(Int(x.get<std::string>()));
    return out;
}

inline json soc_to_json(const SocleDescriptor& s) {
    json out = json::array();
    for (SocSize v : s) {
        if (v == kInfiniteSize) out.push_back("inf");
        else out.push_back(v);
    }
    return out;
}

inline SocleDescriptor soc_from_json(const json& j) {
    SocleDescriptor s;
    for (const auto& v : j) s.push_back(v.is_string() ? kInfiniteSize : v.get<SocSize>());
    return s;
}

// The empty graph serializes to the empty wire string.
inline std::string graph_wire_or_empty(const Graph& g) {
    return g.is_empty() ? std::string() : wire_format(g);
}

inline Graph graph_from_wire_or_empty(const std::string& wire) {
    return wire.empty() ? Graph::empty() : parse_wire(wire);
}

inline json invariants_to_json(const InvariantTuple& t) {
    json j;
    j["k0"] = group_to_json(t.k0);
    j["soc"] = soc_to_json(t.soc);
    j["l_mod_soc"] = json{{"graph", graph_wire_or_empty(t.l_mod_soc)},
                          {"is_self", t.l_mod_soc_is_self}};
    j["unit_raw"] = json{{"coords", ints_to_json(t.unit.raw.coords)},
                         {"moduli", ints_to_json(t.unit.raw.moduli)},
                         {"group", group_to_json(t.unit.raw.group)},
                         {"quotient", group_to_json(t.unit.raw.quotient)}};
    j["unit_canonical"] = json{{"finite_min", ints_to_json(t.unit.finite_min)},
                               {"free_gcd", t.unit.free_gcd.str()},
                               {"display", unit_canonical_display(t.unit)}};
    j["iln"] = t.iln;
    j["hs"] = t.hs;
    j["l_mod_i"] = t.l_mod_i ? json(wire_format(*t.l_mod_i)) : json(nullptr);
    j["mt3_plus_l"] = t.mt3_plus_l;
    j["condition_L"] = t.condition_L;
    j["condition_MT3"] = t.condition_MT3;
    j["cofinal"] = t.cofinal;
    j["condition_NE"] = t.condition_NE;
    j["det"] = t.det.str();
    return j;
}

inline InvariantTuple invariants_from_json(const json& j) {
    InvariantTuple t;
    t.k0 = group_from_json(j.at("k0"));
    t.soc = soc_from_json(j.at("soc"));
    t.l_mod_soc = graph_from_wire_or_empty(j.at("l_mod_soc").at("graph").get<std::string>());
    t.l_mod_soc_is_self = j.at("l_mod_soc").at("is_self").get<bool>();
    const json& ur = j.at("unit_raw");
    t.unit.raw.coords = ints_from_json(ur.at("coords"));
    t.unit.raw.moduli = ints_from_json(ur.at("moduli"));
    t.unit.raw.group = group_from_json(ur.at("group"));
    t.unit.raw.quotient = group_from_json(ur.at("quotient"));
    const json& uc = j.at("unit_canonical");
    t.unit.finite_min = ints_from_json(uc.at("finite_min"));
    t.unit.free_gcd = Int(uc.at("free_gcd").get<std::string>());
    t.iln = j.at("iln").get<int>();
    t.hs = j.at("hs").get<int>();
    if (!j.at("l_mod_i").is_null()) t.l_mod_i = parse_wire(j.at("l_mod_i").get<std::string>());
    t.mt3_plus_l = j.at("mt3_plus_l").get<bool>();
    t.condition_L = j.at("condition_L").get<bool>();
    t.condition_MT3 = j.at("condition_MT3").get<bool>();
    t.cofinal = j.at("cofinal").get<bool>();
    t.condition_NE = j.at("condition_NE").get<bool>();
    t.det = Int(j.at("det").get<std::string>());
    return t;
}

// --- atlas JSON --------------------------------------------------------------

inline json atlas_to_json(const Atlas& atlas) {
    json classes = json::array();
    for (const AtlasClass& c : atlas.classes) {
        json reps = json::array();
        for (const Graph& r : c.representatives) reps.push_back(graph_to_json(r)["adjacency"]);
        classes.push_back(json{{"id", c.id},
                               {"representatives", reps},
                               {"invariants", invariants_to_json(c.invariants)},
                               {"algebra_name", c.algebra_name ? json(*c.algebra_name) : json(nullptr)},
                               {"table_anchor", c.table_anchor},
                               {"discriminators", c.discriminators}});
    }
    json merges = json::array();
    for (const auto& m : data::merge_records()) {
        if (m.n_a > atlas.max_n || m.n_b > atlas.max_n) continue;
        merges.push_back(json{{"n_a", m.n_a}, {"a", m.a}, {"n_b", m.n_b}, {"b", m.b},
                              {"anchor", m.anchor}, {"note", m.note}});
    }
    return json{{"version", kAtlasVersion},
                {"max_n", atlas.max_n},
                {"classes", classes},
                {"merge_records", merges}};
}

// Rebuilds the derivable structure (representative universe, move adjacency,
// class lookup) while taking the class records themselves from the document.
inline Atlas atlas_from_json(const json& j) {
    if (!j.contains("version") || j.at("version").get<std::string>() != kAtlasVersion)
        throw InputError("unsupported atlas document version");
    Atlas atlas;
    atlas.max_n = j.at("max_n").get<int>();
    if (atlas.max_n < 1 || atlas.max_n > 3) throw InputError("atlas max_n out of range");
    std::map<std::pair<int, std::uint64_t>, int> rep_class;  // (n, code) -> class index
    for (const auto& cj : j.at("classes")) {
        AtlasClass c;
        c.id = cj.at("id").get<std::string>();
        std::size_t colon = c.id.find(':');
        if (c.id.size() < 4 || c.id[0] != 'g' || colon == std::string::npos)
            throw InputError("malformed class id: " + c.id);
        c.primary = parse_wire(c.id.substr(colon + 1));
        for (const auto& rj : cj.at("representatives")) {
            Graph r = from_matrix(rj.get<std::vector<std::vector<int>>>());
            rep_class[{r.size(), r.code()}] = static_cast<int>(atlas.classes.size());
            c.representatives.push_back(std::move(r));
        }
        c.invariants = invariants_from_json(cj.at("invariants"));
        if (!cj.at("algebra_name").is_null())
            c.algebra_name = cj.at("algebra_name").get<std::string>();
        c.table_anchor = cj.at("table_anchor").get<std::string>();
        c.discriminators = cj.at("discriminators").get<std::vector<std::string>>();
        atlas.classes.push_back(std::move(c));
    }
    // Rebuild the per-size levels: representatives, one-step move adjacency,
    // and the component-to-class assignment via the recorded representatives.
    for (int n = 1; n <= atlas.max_n; ++n) {
        Atlas::Level lv;
        lv.reps = orbit_representatives(n);
        const int m = static_cast<int>(lv.reps.size());
        for (int k = 0; k < m; ++k) lv.index[lv.reps[static_cast<std::size_t>(k)].code()] = k;
        lv.adj.resize(static_cast<std::size_t>(m));
        std::vector<int> uf(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) uf[static_cast<std::size_t>(k)] = k;
        for (int k = 0; k < m; ++k) {
            const Graph& g = lv.reps[static_cast<std::size_t>(k)];
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b) continue;
                    auto step = [&](const std::optional<Graph>& s, const std::string& kind) {
                        if (!s) return;
                        int l = lv.index.at(canonical_form(*s).code());
                        if (l == k) return;
                        lv.adj[static_cast<std::size_t>(k)].emplace_back(
                            l, kind + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
                        uf[static_cast<std::size_t>(detail::uf_find(uf, k))] =
                            detail::uf_find(uf, l);
                    };
                    step(shift(a, b, g), "sh");
                    step(inverse_shift(a, b, g), "ish");
                }
        }
        lv.class_of.assign(static_cast<std::size_t>(m), -1);
        std::map<int, std::vector<int>> comps;
        for (int k = 0; k < m; ++k) comps[detail::uf_find(uf, k)].push_back(k);
        for (auto& [root, members] : comps) {
            int ci = -1;
            for (int k : members) {
                auto it = rep_class.find({n, lv.reps[static_cast<std::size_t>(k)].code()});
                if (it != rep_class.end()) { ci = it->second; break; }
            }
            if (ci < 0) throw InputError("atlas document covers no representative of a shift component");
            for (int k : members) lv.class_of[static_cast<std::size_t>(k)] = ci;
        }
        atlas.levels[n] = std::move(lv);
    }
    return atlas;
}

// --- table emission ----------------------------------------------------------

struct TableDocument {
    std::string name;     // file stem, e.g. "table-3.6"
    std::string content;
};

namespace detail {

// Column selection per published table.
struct TableColumns {
    bool k0 = false, soc = false, l_soc = false, unit = false;
    bool iln = false, hs = false, l_i = false, mt3l = false;
};

inline TableColumns table_columns(const std::string& id) {
    TableColumns c;
    if (id == "2") { c.k0 = c.soc = c.hs = true; }
    else if (id == "3.1") { c.soc = c.l_soc = c.unit = true; }
    else if (id == "3.2") { c.soc = c.l_soc = c.iln = true; }
    else if (id == "3.3") { c.soc = true; }
    else if (id == "3.4") { c.l_soc = true; }
    else if (id == "3.6") { c.unit = c.iln = c.hs = c.l_i = c.mt3l = true; }
    else if (id == "3.7") { c.unit = c.iln = true; }
    else if (id == "3.9" || id == "3.10") { c.unit = true; }
    return c;
}

// Quotient display: the named algebra of the quotient's class where one is
// recorded, otherwise the class id.
inline std::string quotient_display(const Graph& original, const Graph& q, const Atlas& atlas) {
    std::string ref = quotient_ref(original, q, atlas);
    if (ref == "0" || ref == "self") return ref;
    for (const AtlasClass& c : atlas.classes)
        if (c.id == ref) return c.algebra_name ? *c.algebra_name : c.id;
    return ref;
}

inline std::string unit_display(const UnitClass& u) {
    if (u.raw.group.is_trivial()) return "0";
    if (u.raw.group.is_finite()) return coords_display(u.finite_min);
    if (u.raw.group.torsion.empty() && u.raw.group.free_rank == 1)
        return u.free_gcd.str();
    // Ambiguous bases: report both modes.
    return "raw(" + unit_raw_display(u) + ") canonical(" + unit_canonical_display(u) + ")";
}

inline std::string caption(const data::TableSpec& t) {
    std::string s = "Table " + std::string(t.id);
    if (t.k0[0] != '\0')
        s += std::string(": ") + (t.soc_nonzero ? "nonzero" : "zero") + " socle, K0 = " + t.k0;
    return s;
}

}  // namespace detail

inline std::vector<TableDocument> emit_tables(const Atlas& atlas, const std::string& format) {
    if (format != "md" && format != "csv" && format != "json")
        throw UnsupportedFormatError(format);
    std::vector<TableDocument> docs;
    for (const auto& t : data::tables()) {
        bool in_range = true;
        for (const auto& tr : t.rows)
            if (parse_wire(tr.matrix).size() > atlas.max_n) in_range = false;
        if (!in_range) continue;
        const detail::TableColumns cols = detail::table_columns(t.id);
        std::vector<std::string> header = {"E"};
        if (cols.k0) header.push_back("K0");
        if (cols.soc) header.push_back("Soc");
        if (cols.l_soc) header.push_back("L/Soc");
        if (cols.unit) header.push_back("[1]");
        if (cols.iln) header.push_back("ILN");
        if (cols.hs) header.push_back("HS");
        if (cols.l_i) header.push_back("L/I");
        if (cols.mt3l) header.push_back("MT3+L");
        header.push_back("L_K(E)");
        std::vector<std::vector<std::string>> body;
        for (const auto& tr : t.rows) {
            const Graph g = parse_wire(tr.matrix);
            const InvariantTuple s = signature(g);
            const AtlasClass& cls = atlas.classes[static_cast<std::size_t>(
                atlas.class_of(g.size(), canonical_form(g)))];
            std::vector<std::string> row = {tr.matrix};
            if (cols.k0) row.push_back(group_display(s.k0));
            if (cols.soc) row.push_back(socle_display(s.soc));
            if (cols.l_soc) row.push_back(detail::quotient_display(g, s.l_mod_soc, atlas));
            if (cols.unit) row.push_back(detail::unit_display(s.unit));
            if (cols.iln) row.push_back(std::to_string(s.iln));
            if (cols.hs) row.push_back(std::to_string(s.hs));
            if (cols.l_i)
                row.push_back(s.l_mod_i ? detail::quotient_display(g, *s.l_mod_i, atlas) : "");
            if (cols.mt3l) row.push_back(s.mt3_plus_l ? "T" : "F");
            row.push_back(cls.algebra_name ? *cls.algebra_name : "---");
            body.push_back(std::move(row));
        }
        TableDocument doc;
        doc.name = "table-" + std::string(t.id);
        if (format == "md") {
            std::string s = "# " + detail::caption(t) + "\n\n";
            auto line = [](const std::vector<std::string>& cells) {
                std::string l = "|";
                for (const auto& c : cells) l += " " + c + " |";
                return l + "\n";
            };
            s += line(header);
            std::vector<std::string> rule(header.size(), "---");
            s += line(rule);
            for (const auto& r : body) s += line(r);
            doc.content = s;
        } else if (format == "csv") {
            auto line = [](const std::vector<std::string>& cells) {
                std::string l;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i) l += ',';
                    l += '"' + cells[i] + '"';
                }
                return l + "\n";
            };
            doc.content = line(header);
            for (const auto& r : body) doc.content += line(r);
        } else {
            json rows = json::array();
            for (const auto& r : body) {
                json row;
                for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = r[i];
                rows.push_back(std::move(row));
            }
            doc.content = json{{"table", t.id},
                               {"caption", detail::caption(t)},
                               {"rows", rows}}.dump(2) + "\n";
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

}  // namespace lpa

#endif
