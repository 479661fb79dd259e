#ifndef LPA_ATLAS_HPP
#define LPA_ATLAS_HPP

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpa/atlas_data.hpp"
#include "lpa/invariants.hpp"
#include "lpa/orbits.hpp"
#include "lpa/shift.hpp"

namespace lpa {

// --- display helpers -------------------------------------------------------

inline std::string wire_format(const Graph& g) {
    std::string s;
    for (int i = 0; i < g.size(); ++i) {
        if (i) s += ';';
        for (int j = 0; j < g.size(); ++j) {
            if (j) s += ',';
            s += static_cast<char>('0' + g.at(i, j));
        }
    }
    return s;
}

inline std::string group_display(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::vector<std::string> parts;
    if (g.free_rank == 1) parts.push_back("Z");
    else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
    for (std::size_t i = 0; i < g.torsion.size();) {
        std::size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
        std::string p = "Z" + g.torsion[i].str();
        if (j - i > 1) p += "^" + std::to_string(j - i);
        parts.push_back(p);
        i = j;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        out += parts[i];
    }
    return out;
}

inline std::string coords_display(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

inline std::string unit_raw_display(const UnitClass& u) { return coords_display(u.raw.coords); }

inline std::string unit_canonical_display(const UnitClass& u) {
    if (u.raw.group.is_finite()) return coords_display(u.finite_min);
    std::string s = "gcd=" + u.free_gcd.str() + ";quot=" + group_display(u.raw.quotient);
    return s;
}

inline std::string matrix_summand(SocSize size, const std::string& base) {
    if (size == 1) return base;
    if (size == kInfiniteSize) return "M_inf(" + base + ")";
    return "M_" + std::to_string(size) + "(" + base + ")";
}

inline std::string socle_display(const SocleDescriptor& s) {
    if (s.empty()) return "0";
    std::vector<std::string> parts;
    for (SocSize v : s) parts.push_back(matrix_summand(v, "K"));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

// --- atlas types ------------------------------------------------------------

struct AtlasClass {
    std::string id;                       // "g{n}:{wire of primary}"
    Graph primary;                        // lex-min orbit representative, smallest n
    std::vector<Graph> representatives;   // the irredundant-sweep survivors
    InvariantTuple invariants;            // computed from primary
    std::optional<std::string> algebra_name;
    std::string table_anchor;             // "" when the class has no table row
    std::vector<std::string> discriminators;
};

struct BuildReport {
    std::map<int, long long> orbit_counts;
    std::map<int, long long> survivor_counts;     // one-step sweep output
    std::map<int, long long> component_counts;    // transitive shift closure
    bool one_step_vs_transitive_gap = false;
    std::vector<std::string> raw_only_pairs;      // separated only by raw unit coords
    int pis_rep_count = 0;                        // size-3 survivors passing the gate
    int pis_class_count = 0;
    std::vector<std::string> lines;
};

class Atlas;
struct ClassifyResult {
    int class_index = -1;
    std::string class_id;
    std::vector<std::string> moves;  // human-readable path evidence
    InvariantTuple invariants;       // recomputed from the input graph
};

class Atlas {
public:
    int max_n = 0;
    std::vector<AtlasClass> classes;
    BuildReport report;

    struct Level {
        std::vector<Graph> reps;            // canonical orbit representatives
        std::map<std::uint64_t, int> index; // code -> rep position
        // rep adjacency under one-step moves, with the move that realizes it
        std::vector<std::vector<std::pair<int, std::string>>> adj;
        std::vector<int> class_of;          // rep position -> class index
    };
    std::map<int, Level> levels;

    int class_of(int n, const Graph& canonical_rep) const {
        auto lv = levels.find(n);
        if (lv == levels.end()) throw InternalError("no atlas level for this size");
        auto it = lv->second.index.find(canonical_rep.code());
        if (it == lv->second.index.end())
            throw InternalError("canonical form missing from the representative universe");
        return lv->second.class_of[static_cast<std::size_t>(it->second)];
    }
};

// --- classification ---------------------------------------------------------

inline ClassifyResult classify(const Graph& g, const Atlas& atlas) {
    if (g.is_empty()) throw EmptyGraphError();
    if (g.size() > atlas.max_n) throw TooLargeError();
    const Graph c = canonical_form(g);
    ClassifyResult r;
    r.class_index = atlas.class_of(g.size(), c);
    const AtlasClass& cls = atlas.classes[static_cast<std::size_t>(r.class_index)];
    r.class_id = cls.id;
    if (c != g) r.moves.push_back("relabel to canonical form " + wire_format(c));
    // Move path from c to the nearest same-size class representative.
    const Atlas::Level& lv = atlas.levels.at(g.size());
    int start = lv.index.at(c.code());
    std::vector<int> prev(lv.reps.size(), -1);
    std::vector<std::string> via(lv.reps.size());
    std::vector<char> seen(lv.reps.size(), 0);
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    int goal = -1;
    auto is_goal = [&](int k) {
        for (const Graph& rep : cls.representatives)
            if (rep.size() == g.size() && rep.code() == lv.reps[static_cast<std::size_t>(k)].code())
                return true;
        return false;
    };
    while (!q.empty() && goal < 0) {
        int k = q.front(); q.pop();
        if (is_goal(k)) { goal = k; break; }
        for (auto& [l, label] : lv.adj[static_cast<std::size_t>(k)]) {
            if (seen[static_cast<std::size_t>(l)]) continue;
            seen[static_cast<std::size_t>(l)] = 1;
            prev[static_cast<std::size_t>(l)] = k;
            via[static_cast<std::size_t>(l)] = label;
            q.push(l);
        }
    }
    if (goal < 0) throw InternalError("no move path to a class representative");
    std::vector<std::string> path;
    for (int k = goal; k != start; k = prev[static_cast<std::size_t>(k)])
        path.push_back(via[static_cast<std::size_t>(k)] + " reaches " +
                       wire_format(lv.reps[static_cast<std::size_t>(k)]));
    for (auto it = path.rbegin(); it != path.rend(); ++it) r.moves.push_back(*it);
    r.invariants = signature(g);
    // Cross-check the basis-independent invariants against the class record.
    const InvariantTuple& a = r.invariants;
    const InvariantTuple& b = cls.invariants;
    bool ok = a.k0 == b.k0 && a.soc == b.soc && a.hs == b.hs && a.iln == b.iln &&
              a.mt3_plus_l == b.mt3_plus_l &&
              a.unit.raw.quotient == b.unit.raw.quotient &&
              a.unit.finite_min == b.unit.finite_min && a.unit.free_gcd == b.unit.free_gcd;
    if (!ok) throw InternalError("invariants disagree with the matched class");
    return r;
}

// Parses the wire format: rows joined by ';', entries by ','.
inline Graph parse_wire(const std::string& wire) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(wire);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            if (cell.empty() || cell.find_first_not_of("-0123456789") != std::string::npos)
                throw InputError("bad matrix entry: '" + cell + "'");
            r.push_back(std::stoi(cell));
        }
        rows.push_back(std::move(r));
    }
    return from_matrix(rows);
}

// Class reference of a quotient graph: "0" for the empty graph, otherwise
// the class id; "self" when the quotient equals the original graph.
inline std::string quotient_ref(const Graph& original, const Graph& quotient, const Atlas& atlas) {
    if (quotient.is_empty()) return "0";
    if (quotient == original) return "self";
    return atlas.classes[static_cast<std::size_t>(
        atlas.class_of(quotient.size(), canonical_form(quotient)))].id;
}

// --- naming ----------------------------------------------------------------

inline bool purely_infinite_simple_gate(const Graph& g) {
    if (hs(g) != 0 || !condition_L(g)) return false;
    for (int v = 0; v < g.size(); ++v)
        if (!connects_to_cycle(g, v)) return false;
    return true;
}

namespace detail {

inline std::optional<std::string> pis_name(const Graph& g) {
    const AbelianGroup grp = k0(g);
    const UnitClass u = unit_class(g);
    const std::string key_k0 = group_display(grp);
    const std::string key_unit = grp.is_finite() ? coords_display(u.finite_min) : "";
    for (const auto& e : data::pis_names())
        if (key_k0 == e.k0 && (grp.is_finite() ? key_unit == e.unit : true)) {
            if (e.name[0] == '\0') return std::nullopt;  // recorded as unnamed
            return std::string(e.name);
        }
    return std::nullopt;
}

}  // namespace detail

// The naming cascade: split into weakly connected components; name no-exit
// components from sink and cycle path counts, purely infinite simple
// components from the curated (K0, [1]) table, and otherwise fall back to
// the class's curated name. Returns nothing rather than a guessed name.
inline std::optional<std::string> named_algebra(const Graph& g, const Atlas& atlas) {
    if (g.is_empty()) return std::string("0");
    std::vector<std::string> parts;
    for (VertexSet comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (condition_NE(sub)) {
            for (int u = 0; u < sub.size(); ++u)
                if (is_sink(sub, u)) parts.push_back(matrix_summand(count_paths_to(sub, u), "K"));
            for (VertexSet cyc : no_exit_cycles(sub)) {
                int v0 = __builtin_ctz(cyc);
                parts.push_back(matrix_summand(laurent_summand_size(sub, cyc, v0), "K[x,x^-1]"));
            }
        } else if (purely_infinite_simple_gate(sub)) {
            auto name = detail::pis_name(sub);
            if (!name) return std::nullopt;
            parts.push_back(*name);
        } else {
            int ci = atlas.class_of(sub.size(), canonical_form(sub));
            // Only curated names are safe here; derived names would recurse
            // into the very class being named.
            const char* curated = nullptr;
            for (const auto& c : data::curated_class_names())
                if (c.n <= atlas.max_n &&
                    atlas.class_of(c.n, canonical_form(parse_wire(c.matrix))) == ci)
                    curated = c.name;
            if (!curated) return std::nullopt;
            parts.push_back(curated);
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

// --- build ------------------------------------------------------------------

namespace detail {

inline int uf_find(std::vector<int>& uf, int x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
        uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        x = uf[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace detail

inline Atlas build_atlas(int max_n) {
    if (max_n < 1 || max_n > 3) throw SizeLimitError("atlas supports 1 to 3 vertices");
    Atlas atlas;
    atlas.max_n = max_n;

    for (int n = 1; n <= max_n; ++n) {
        Atlas::Level lv;
        lv.reps = orbit_representatives(n);
        const int m = static_cast<int>(lv.reps.size());
        for (int k = 0; k < m; ++k) lv.index[lv.reps[static_cast<std::size_t>(k)].code()] = k;
        lv.adj.resize(static_cast<std::size_t>(m));
        std::vector<int> uf(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) uf[static_cast<std::size_t>(k)] = k;
        for (int k = 0; k < m; ++k) {
            const Graph& g = lv.reps[static_cast<std::size_t>(k)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    auto step = [&](const std::optional<Graph>& s, const std::string& kind) {
                        if (!s) return;
                        int l = lv.index.at(canonical_form(*s).code());
                        if (l == k) return;
                        lv.adj[static_cast<std::size_t>(k)].emplace_back(
                            l, kind + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
                        uf[static_cast<std::size_t>(detail::uf_find(uf, k))] = detail::uf_find(uf, l);
                    };
                    step(shift(i, j, g), "sh");
                    step(inverse_shift(i, j, g), "ish");
                }
        }
        auto survivors = reduce(lv.reps);
        std::map<int, std::vector<int>> comps;  // root -> rep positions
        for (int k = 0; k < m; ++k) comps[detail::uf_find(uf, k)].push_back(k);
        atlas.report.orbit_counts[n] = m;
        atlas.report.survivor_counts[n] = static_cast<long long>(survivors.size());
        atlas.report.component_counts[n] = static_cast<long long>(comps.size());
        if (static_cast<long long>(survivors.size()) != static_cast<long long>(comps.size()))
            atlas.report.one_step_vs_transitive_gap = true;

        lv.class_of.assign(static_cast<std::size_t>(m), -1);
        std::map<std::uint64_t, bool> survivor_set;
        for (const Graph& s : survivors) survivor_set[s.code()] = true;
        for (auto& [root, members] : comps) {
            AtlasClass cls;
            cls.primary = lv.reps[static_cast<std::size_t>(members.front())];  // members ascend, reps sorted
            for (int k : members)
                if (survivor_set.count(lv.reps[static_cast<std::size_t>(k)].code()))
                    cls.representatives.push_back(lv.reps[static_cast<std::size_t>(k)]);
            if (cls.representatives.empty())
                throw InternalError("shift component without a sweep survivor");
            cls.id = "g" + std::to_string(n) + ":" + wire_format(cls.primary);
            cls.invariants = signature(cls.primary);
            int ci = static_cast<int>(atlas.classes.size());
            for (int k : members) lv.class_of[static_cast<std::size_t>(k)] = ci;
            atlas.classes.push_back(std::move(cls));
        }
        atlas.levels[n] = std::move(lv);
    }

    // Cross-size merges from the curated record. Same-size pairs are already
    // identified by the component structure; verify rather than re-merge.
    std::vector<int> remap(atlas.classes.size());
    for (std::size_t i = 0; i < remap.size(); ++i) remap[i] = static_cast<int>(i);
    auto class_of_wire = [&](int n, const char* wire) {
        return atlas.class_of(n, canonical_form(parse_wire(wire)));
    };
    for (const auto& rec : data::merge_records()) {
        if (rec.n_a > max_n || rec.n_b > max_n) continue;
        int a = detail::uf_find(remap, class_of_wire(rec.n_a, rec.a));
        int b = detail::uf_find(remap, class_of_wire(rec.n_b, rec.b));
        if (a == b) continue;  // e.g. the within-size triple, already one component
        // Consistency: the basis-independent invariants must agree.
        const InvariantTuple& x = atlas.classes[static_cast<std::size_t>(a)].invariants;
        const InvariantTuple& y = atlas.classes[static_cast<std::size_t>(b)].invariants;
        if (!(x.k0 == y.k0 && x.soc == y.soc && x.hs == y.hs && x.iln == y.iln &&
              x.mt3_plus_l == y.mt3_plus_l && x.unit.raw.quotient == y.unit.raw.quotient &&
              x.unit.finite_min == y.unit.finite_min && x.unit.free_gcd == y.unit.free_gcd))
            throw InternalError("merge record joins classes with different invariants");
        // Keep the class with the smaller primary graph.
        int keep = a, drop = b;
        const Graph& ga = atlas.classes[static_cast<std::size_t>(a)].primary;
        const Graph& gb = atlas.classes[static_cast<std::size_t>(b)].primary;
        if (gb.size() < ga.size() || (gb.size() == ga.size() && gb.code() < ga.code()))
            std::swap(keep, drop);
        auto& ck = atlas.classes[static_cast<std::size_t>(keep)];
        auto& cd = atlas.classes[static_cast<std::size_t>(drop)];
        ck.representatives.insert(ck.representatives.end(), cd.representatives.begin(),
                                  cd.representatives.end());
        remap[static_cast<std::size_t>(drop)] = keep;
    }
    // Compact: renumber surviving classes and rewrite the level maps.
    std::vector<AtlasClass> merged;
    std::vector<int> final_index(atlas.classes.size(), -1);
    for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
        if (detail::uf_find(remap, static_cast<int>(i)) != static_cast<int>(i)) continue;
        final_index[i] = static_cast<int>(merged.size());
        merged.push_back(std::move(atlas.classes[i]));
    }
    for (auto& [n, lv] : atlas.levels)
        for (auto& c : lv.class_of)
            c = final_index[static_cast<std::size_t>(detail::uf_find(remap, c))];
    atlas.classes = std::move(merged);
    for (auto& cls : atlas.classes)
        std::sort(cls.representatives.begin(), cls.representatives.end(),
                  [](const Graph& a, const Graph& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a.code() < b.code();
                  });

    // Table anchors from the published layout.
    for (const auto& table : data::tables()) {
        int row = 0;
        for (const auto& tr : table.rows) {
            ++row;
            Graph g = parse_wire(tr.matrix);
            if (g.size() > max_n) continue;
            auto& cls = atlas.classes[static_cast<std::size_t>(
                atlas.class_of(g.size(), canonical_form(g)))];
            std::string anchor = std::string(table.id) + " row " + std::to_string(row);
            if (!cls.table_anchor.empty()) cls.table_anchor += "; ";
            cls.table_anchor += anchor;
        }
    }
    // Curated class names first, then the cascade for everything else.
    for (const auto& c : data::curated_class_names()) {
        if (c.n > max_n) continue;
        auto& cls = atlas.classes[static_cast<std::size_t>(class_of_wire(c.n, c.matrix))];
        cls.algebra_name = std::string(c.name);
    }
    for (auto& cls : atlas.classes)
        if (!cls.algebra_name) cls.algebra_name = named_algebra(cls.primary, atlas);

    // Purely infinite simple gate statistics over the size-3 survivors.
    if (max_n >= 3) {
        std::set<int> gate_classes;
        std::set<std::pair<std::string, std::string>> gate_data;
        for (const auto& cls : atlas.classes)
            for (const Graph& rep : cls.representatives) {
                if (rep.size() != 3 || !purely_infinite_simple_gate(rep)) continue;
                ++atlas.report.pis_rep_count;
                gate_classes.insert(atlas.class_of(3, rep));
                const auto& t = signature(rep);
                gate_data.insert({group_display(t.k0),
                                  unit_canonical_display(t.unit)});
            }
        atlas.report.pis_class_count = static_cast<int>(gate_classes.size());
        atlas.report.lines.push_back(
            "purely infinite simple gate: " + std::to_string(atlas.report.pis_rep_count) +
            " size-3 survivors in " + std::to_string(atlas.report.pis_class_count) +
            " classes, " + std::to_string(gate_data.size()) + " distinct (K0, [1]) values");
    }

    // Discriminator analysis over the published rows, bucket by bucket.
    for (const auto& table : data::tables()) {
        if (table.id[0] != '3' || max_n < 3) continue;
        std::vector<InvariantTuple> sigs;
        std::vector<int> row_class;
        for (const auto& tr : table.rows) {
            Graph g = parse_wire(tr.matrix);
            sigs.push_back(signature(g));
            row_class.push_back(atlas.class_of(g.size(), canonical_form(g)));
        }
        std::vector<Graph> graphs;
        for (const auto& tr : table.rows) graphs.push_back(parse_wire(tr.matrix));
        for (std::size_t i = 0; i < sigs.size(); ++i)
            for (std::size_t j = i + 1; j < sigs.size(); ++j) {
                const auto& a = sigs[i];
                const auto& b = sigs[j];
                // "self" quotients carry no information beyond the graph
                // itself, so the L/Soc column never separates them.
                std::string qa = quotient_ref(graphs[i], a.l_mod_soc, atlas);
                std::string qb = quotient_ref(graphs[j], b.l_mod_soc, atlas);
                std::string field;
                if (a.soc != b.soc) field = "Soc";
                else if (qa != "self" && qb != "self" && qa != qb) field = "L/Soc";
                else if (a.unit.finite_min != b.unit.finite_min ||
                         a.unit.free_gcd != b.unit.free_gcd ||
                         a.unit.raw.quotient != b.unit.raw.quotient)
                    field = "[1] canonical";
                else if (a.iln != b.iln) field = "ILN";
                else if (a.hs != b.hs) field = "HS";
                else if (a.l_mod_i.has_value() != b.l_mod_i.has_value() ||
                         (a.l_mod_i && quotient_ref(graphs[i], *a.l_mod_i, atlas) !=
                                           quotient_ref(graphs[j], *b.l_mod_i, atlas)))
                    field = "L/I";
                else if (a.mt3_plus_l != b.mt3_plus_l) field = "MT3+L";
                else if (a.unit.raw.coords != b.unit.raw.coords ||
                         a.unit.raw.moduli != b.unit.raw.moduli)
                    field = "[1] raw only";
                else field = "none";
                std::string line = std::string("table ") + table.id + " rows " +
                                   std::to_string(i + 1) + "/" + std::to_string(j + 1) +
                                   ": " + field;
                if (field == "[1] raw only") atlas.report.raw_only_pairs.push_back(line);
                if (j == i + 1) {
                    atlas.report.lines.push_back(line);
                    for (int ci : {row_class[i], row_class[j]})
                        atlas.classes[static_cast<std::size_t>(ci)].discriminators.push_back(line);
                }
            }
    }
    for (const auto& p : atlas.report.raw_only_pairs)
        atlas.report.lines.push_back("WARNING basis-dependent separation: " + p);
    if (atlas.report.one_step_vs_transitive_gap)
        atlas.report.lines.push_back(
            "NOTE: one-step sweep survivors exceed transitive shift components; "
            "repeated moves identify more graphs than single moves");
    return atlas;
}

}  // namespace lpa

#endif
