#ifndef LPA_INVARIANTS_HPP
#define LPA_INVARIANTS_HPP

#include <limits>
#include <optional>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/smith.hpp"

namespace lpa {

// Matrix size over K in a socle summand; kInfiniteSize means M_inf(K).
// The sentinel is the largest value so sorted multisets order it last.
using SocSize = long long;
inline constexpr SocSize kInfiniteSize = std::numeric_limits<SocSize>::max();

// Multiset of socle matrix sizes, one per sink, sorted ascending.
using SocleDescriptor = std::vector<SocSize>;

// The square presentation matrix of K0: transpose of the adjacency matrix
// minus the non-sink indicator diagonal. Sink columns stay zero, which makes
// the square cokernel agree with the rectangular one.
inline IntMatrix k0_matrix(const Graph& g) {
    const int n = g.size();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g.at(j, i);
    for (int i = 0; i < n; ++i)
        if (!is_sink(g, i)) m(i, i) -= 1;
    return m;
}

inline AbelianGroup k0(const Graph& g) { return cokernel(k0_matrix(g)); }

// Number of directed paths ending at u, the trivial path included; infinite
// exactly when a cycle vertex reaches u.
inline SocSize count_paths_to_vertex(const Graph& g, int u) {
    VertexSet reaches = 0;  // vertices with a path (possibly trivial) to u
    for (int v = 0; v < g.size(); ++v)
        if (tree(g, VertexSet(1) << v) & (VertexSet(1) << u)) reaches |= VertexSet(1) << v;
    if (reaches & detail::cycle_vertices(g)) return kInfiniteSize;
    // Acyclic on the reach set; memoized count of paths from v to u.
    std::vector<SocSize> memo(static_cast<std::size_t>(g.size()), -1);
    auto count = [&](auto&& self, int v) -> SocSize {
        SocSize& m = memo[static_cast<std::size_t>(v)];
        if (m >= 0) return m;
        SocSize c = (v == u) ? 1 : 0;
        for (int w = 0; w < g.size(); ++w)
            if (g.at(v, w) && (reaches & (VertexSet(1) << w))) c += self(self, w);
        return m = c;
    };
    SocSize total = 0;
    for (int v = 0; v < g.size(); ++v)
        if (reaches & (VertexSet(1) << v)) total += count(count, v);
    return total;
}

inline SocSize count_paths_to(const Graph& g, int u) {
    if (!is_sink(g, u)) throw NotASinkError();
    return count_paths_to_vertex(g, u);
}

inline SocleDescriptor socle(const Graph& g) {
    SocleDescriptor s;
    for (int u = 0; u < g.size(); ++u)
        if (is_sink(g, u)) s.push_back(count_paths_to(g, u));
    std::sort(s.begin(), s.end());
    return s;
}

inline Graph quotient_mod_socle(const Graph& g) {
    if (g.is_empty()) return g;
    return quotient_graph(g, saturated_closure(g, sinks(g)));
}

// Count of isolated loops: single-vertex components whose vertex carries a loop.
inline int iln(const Graph& g) {
    int c = 0;
    for (VertexSet comp : connected_components(g)) {
        if (popcount(comp) != 1) continue;
        int v = __builtin_ctz(comp);
        if (g.at(v, v)) ++c;
    }
    return c;
}

// Number of nontrivial hereditary saturated subsets.
inline int hs(const Graph& g) {
    if (g.is_empty()) return 0;
    return static_cast<int>(hereditary_saturated_subsets(g).size()) - 2;
}

// The quotient by the unique nontrivial hereditary saturated subset, defined
// exactly when hs = 1.
inline std::optional<Graph> l_mod_i(const Graph& g) {
    if (g.is_empty()) return std::nullopt;
    auto subsets = hereditary_saturated_subsets(g);
    if (subsets.size() != 3) return std::nullopt;
    return quotient_graph(g, subsets[1]);  // sorted: empty, H, full
}

inline bool mt3_plus_l(const Graph& g) { return condition_MT3(g) && condition_L(g); }

// The class [1] in K0 with both comparison modes: the literal coordinates in
// the pinned Smith basis, and data invariant under any basis choice.
struct UnitClass {
    PointedElement raw;
    // Canonical part: (group, companion quotient) always; plus the Aut-orbit
    // minimum of the coordinates when the group is finite, and the gcd of
    // the free coordinates' absolute values otherwise.
    std::vector<Int> finite_min;
    Int free_gcd = 0;

    bool operator==(const UnitClass&) const = default;
};

inline UnitClass unit_class(const Graph& g) {
    UnitClass u;
    if (g.is_empty()) return u;
    std::vector<Int> ones(static_cast<std::size_t>(g.size()), 1);
    u.raw = pointed_cokernel(k0_matrix(g), ones);
    if (u.raw.group.is_finite()) {
        std::vector<Int> torsion_coords;
        for (std::size_t i = 0; i < u.raw.coords.size(); ++i)
            if (u.raw.moduli[i] > 0) torsion_coords.push_back(u.raw.coords[i]);
        u.finite_min = aut_orbit_min(u.raw.group.torsion, torsion_coords);
    } else {
        for (std::size_t i = 0; i < u.raw.coords.size(); ++i)
            if (u.raw.moduli[i] == 0)
                u.free_gcd = boost::multiprecision::gcd(u.free_gcd, abs(u.raw.coords[i]));
    }
    return u;
}

// Diagnostic only: det(I - transposed adjacency); never used for class identity.
inline Int det_i_minus_nt(const Graph& g) {
    const int n = g.size();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1 : 0) - g.at(j, i);
    return determinant(m);
}

// The complete invariant system of one graph. Quotients are carried as
// graphs; the atlas resolves them to class references.
struct InvariantTuple {
    AbelianGroup k0;
    SocleDescriptor soc;
    Graph l_mod_soc;           // quotient graph; may equal the graph itself
    bool l_mod_soc_is_self = false;
    UnitClass unit;
    int iln = 0;
    int hs = 0;
    std::optional<Graph> l_mod_i;  // present iff hs == 1
    bool mt3_plus_l = false;
    // Diagnostics.
    bool condition_L = false;
    bool condition_MT3 = false;
    bool cofinal = false;
    bool condition_NE = false;
    Int det;
};

inline InvariantTuple signature(const Graph& g) {
    InvariantTuple t;
    t.k0 = k0(g);
    t.soc = socle(g);
    t.l_mod_soc = quotient_mod_socle(g);
    t.l_mod_soc_is_self = (t.l_mod_soc == g);
    t.unit = unit_class(g);
    t.iln = iln(g);
    t.hs = hs(g);
    t.l_mod_i = l_mod_i(g);
    t.mt3_plus_l = mt3_plus_l(g);
    t.condition_L = condition_L(g);
    t.condition_MT3 = condition_MT3(g);
    t.cofinal = cofinal(g);
    t.condition_NE = condition_NE(g);
    t.det = det_i_minus_nt(g);
    return t;
}

// The no-exit cycles of a graph, as vertex sets; under Condition (NE) they
// are pairwise disjoint (a shared vertex would be an exit).
inline std::vector<VertexSet> no_exit_cycles(const Graph& g) {
    VertexSet cyc = detail::cycle_vertices(g);
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 0; v < g.size(); ++v) {
        VertexSet bit = VertexSet(1) << v;
        if (!(cyc & bit) || (seen & bit)) continue;
        if (g.out_degree(v) != 1) continue;
        // Walk the unique out-edges; a no-exit cycle returns to v.
        VertexSet walk = bit;
        int w = v;
        bool simple = true;
        for (;;) {
            int next = -1;
            for (int k = 0; k < g.size(); ++k)
                if (g.at(w, k)) { next = k; break; }
            if (next < 0 || g.out_degree(next) != 1) { simple = false; break; }
            if (next == v) break;
            VertexSet nb = VertexSet(1) << next;
            if (walk & nb) { simple = false; break; }  // entered a cycle not through v
            walk |= nb;
            w = next;
        }
        if (simple) {
            out.push_back(walk);
            seen |= walk;
        }
    }
    return out;
}

// Matrix size of the Laurent summand attached to a no-exit cycle: the number
// of paths whose only visit to the base vertex is at the end. Independent of
// the chosen vertex (tested).
inline SocSize laurent_summand_size(const Graph& g, VertexSet cycle, int v0) {
    if (!(cycle & (VertexSet(1) << v0)))
        throw InternalError("base vertex not on the cycle");
    // Paths that reach v0 for the first time: drop the out-edges of v0 so no
    // path may pass through it, then count paths into the resulting sink.
    std::vector<std::uint8_t> e;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            e.push_back(static_cast<std::uint8_t>(i == v0 ? 0 : g.at(i, j)));
    return count_paths_to_vertex(Graph(g.size(), std::move(e)), v0);
}

}  // namespace lpa

#endif
