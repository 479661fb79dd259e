#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

// Vertex subsets of a graph with at most 32 vertices, one bit per vertex
// (bit k = vertex k, 0-based).
using VertexSet = std::uint32_t;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }

inline VertexSet full_set(int n) {
    return n >= 32 ? ~VertexSet(0) : (VertexSet(1) << n) - 1;
}

// A finite directed graph without parallel edges, held as a binary adjacency
// matrix: entry (i, j) = 1 iff there is an edge from i to j. Immutable.
// The empty graph (n = 0) exists only as a quotient value; it cannot be
// built through from_matrix.
class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, std::vector<std::uint8_t> entries) : n_(n), a_(std::move(entries)) {}

    static Graph empty() { return Graph(); }

    int size() const { return n_; }
    bool is_empty() const { return n_ == 0; }
    int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    // Row-major packed form, entry (0,0) in the most significant bit.
    // Total order and hash key for graphs of equal size.
    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < a_.size(); ++k) c = (c << 1) | a_[k];
        return c;
    }

    static Graph from_code(int n, std::uint64_t code) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(n) * n);
        for (int k = static_cast<int>(e.size()) - 1; k >= 0; --k) {
            e[static_cast<std::size_t>(k)] = code & 1;
            code >>= 1;
        }
        return Graph(n, std::move(e));
    }

    int edge_count() const {
        int c = 0;
        for (auto v : a_) c += v;
        return c;
    }

    int loop_count() const {
        int c = 0;
        for (int i = 0; i < n_; ++i) c += at(i, i);
        return c;
    }

    int out_degree(int v) const {
        int c = 0;
        for (int j = 0; j < n_; ++j) c += at(v, j);
        return c;
    }

    bool operator==(const Graph& o) const = default;
    auto operator<=>(const Graph& o) const = default;

private:
    int n_;
    std::vector<std::uint8_t> a_;
};

// Validates a raw integer matrix as a graph. Rejects non-square input,
// entries outside {0,1} and the empty matrix.
inline Graph from_matrix(const std::vector<std::vector<int>>& rows) {
    const auto n = rows.size();
    if (n == 0) throw EmptyGraphError();
    std::vector<std::uint8_t> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw NonSquareError();
        for (int x : row) {
            if (x < 0 || x > 1) throw NotSingError();
            e.push_back(static_cast<std::uint8_t>(x));
        }
    }
    return Graph(static_cast<int>(n), std::move(e));
}

inline Graph graph(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> m;
    for (auto& r : rows) m.emplace_back(r);
    return from_matrix(m);
}

inline bool is_sink(const Graph& g, int v) {
    for (int j = 0; j < g.size(); ++j)
        if (g.at(v, j)) return false;
    return true;
}

inline VertexSet sinks(const Graph& g) {
    VertexSet s = 0;
    for (int v = 0; v < g.size(); ++v)
        if (is_sink(g, v)) s |= VertexSet(1) << v;
    return s;
}

// Forward-reachability closure T(X): the smallest hereditary superset of x.
inline VertexSet tree(const Graph& g, VertexSet x) {
    VertexSet r = x;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.size(); ++v) {
            if (!(r & (VertexSet(1) << v))) continue;
            for (int w = 0; w < g.size(); ++w) {
                VertexSet bit = VertexSet(1) << w;
                if (g.at(v, w) && !(r & bit)) { r |= bit; grew = true; }
            }
        }
    }
    return r;
}

inline bool is_hereditary(const Graph& g, VertexSet x) {
    return tree(g, x) == x;
}

// A set is saturated when it absorbs every vertex whose (non-empty) set of
// out-neighbours lies inside it. Sinks are never forced in.
inline bool is_saturated(const Graph& g, VertexSet x) {
    for (int v = 0; v < g.size(); ++v) {
        if (x & (VertexSet(1) << v)) continue;
        if (is_sink(g, v)) continue;
        bool inside = true;
        for (int w = 0; w < g.size(); ++w)
            if (g.at(v, w) && !(x & (VertexSet(1) << w))) { inside = false; break; }
        if (inside) return false;
    }
    return true;
}

// Hereditary saturated closure: fixpoint of absorbing vertices that feed
// only into the set, starting from the tree of x.
inline VertexSet saturated_closure(const Graph& g, VertexSet x) {
    VertexSet r = tree(g, x);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.size(); ++v) {
            VertexSet bit = VertexSet(1) << v;
            if (r & bit) continue;
            if (is_sink(g, v)) continue;
            bool inside = true;
            for (int w = 0; w < g.size(); ++w)
                if (g.at(v, w) && !(r & (VertexSet(1) << w))) { inside = false; break; }
            if (inside) { r |= bit; grew = true; }
        }
    }
    return r;
}

// All hereditary saturated subsets, in increasing bitmask order. Computed
// as the sets fixed by their own closure; tests check this against the
// definitional predicate filter.
inline std::vector<VertexSet> hereditary_saturated_subsets(const Graph& g) {
    std::vector<VertexSet> out;
    const VertexSet all = full_set(g.size());
    for (VertexSet s = 0;; ++s) {
        if (saturated_closure(g, s) == s) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

// Quotient by a hereditary set: drop the vertices of h and every edge whose
// range lies in h. h = everything yields the empty graph.
inline Graph quotient_graph(const Graph& g, VertexSet h) {
    if (!is_hereditary(g, h)) throw NotHereditaryError();
    std::vector<int> keep;
    for (int v = 0; v < g.size(); ++v)
        if (!(h & (VertexSet(1) << v))) keep.push_back(v);
    if (keep.empty()) return Graph::empty();
    const int m = static_cast<int>(keep.size());
    std::vector<std::uint8_t> e;
    e.reserve(static_cast<std::size_t>(m) * m);
    for (int i : keep)
        for (int j : keep) e.push_back(static_cast<std::uint8_t>(g.at(i, j)));
    return Graph(m, std::move(e));
}

// Weakly connected components (edge direction ignored), each identified by
// its lowest vertex, listed in that order.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (seen & (VertexSet(1) << v)) continue;
        VertexSet c = VertexSet(1) << v;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < g.size(); ++i) {
                VertexSet bi = VertexSet(1) << i;
                for (int j = 0; j < g.size(); ++j) {
                    if (!g.at(i, j) && !g.at(j, i)) continue;
                    VertexSet bj = VertexSet(1) << j;
                    if (g.at(i, j) || g.at(j, i)) {
                        bool ci = (c & bi) != 0, cj = (c & bj) != 0;
                        if (ci != cj) { c |= bi | bj; grew = true; }
                    }
                }
            }
        }
        comps.push_back(c);
        seen |= c;
    }
    return comps;
}

inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> idx;
    for (int v = 0; v < g.size(); ++v)
        if (keep & (VertexSet(1) << v)) idx.push_back(v);
    if (idx.empty()) return Graph::empty();
    std::vector<std::uint8_t> e;
    for (int i : idx)
        for (int j : idx) e.push_back(static_cast<std::uint8_t>(g.at(i, j)));
    return Graph(static_cast<int>(idx.size()), std::move(e));
}

namespace detail {

// reach[v] = vertices reachable from v by a path of length >= 1.
inline std::vector<VertexSet> positive_reach(const Graph& g) {
    std::vector<VertexSet> r(static_cast<std::size_t>(g.size()), 0);
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < g.size(); ++w)
            if (g.at(v, w)) r[v] |= VertexSet(1) << w;
    for (bool grew = true; grew;) {
        grew = false;
        for (int v = 0; v < g.size(); ++v)
            for (int w = 0; w < g.size(); ++w)
                if (r[v] & (VertexSet(1) << w)) {
                    VertexSet merged = r[v] | r[w];
                    if (merged != r[v]) { r[v] = merged; grew = true; }
                }
    }
    return r;
}

inline bool is_acyclic(const Graph& g) {
    auto r = positive_reach(g);
    for (int v = 0; v < g.size(); ++v)
        if (r[v] & (VertexSet(1) << v)) return false;
    return true;
}

// Vertices lying on some directed cycle.
inline VertexSet cycle_vertices(const Graph& g) {
    auto r = positive_reach(g);
    VertexSet s = 0;
    for (int v = 0; v < g.size(); ++v)
        if (r[v] & (VertexSet(1) << v)) s |= VertexSet(1) << v;
    return s;
}

}  // namespace detail

// Condition (L): every cycle has an exit. A cycle without an exit consists
// entirely of out-degree-1 vertices, so delete every vertex of out-degree
// > 1 and test the remainder for acyclicity.
inline bool condition_L(const Graph& g) {
    VertexSet keep = 0;
    for (int v = 0; v < g.size(); ++v)
        if (g.out_degree(v) <= 1) keep |= VertexSet(1) << v;
    return detail::is_acyclic(induced_subgraph(g, keep));
}

// Condition (NE): no cycle has an exit, i.e. every vertex on a cycle has
// out-degree exactly 1.
inline bool condition_NE(const Graph& g) {
    VertexSet cyc = detail::cycle_vertices(g);
    for (int v = 0; v < g.size(); ++v)
        if ((cyc & (VertexSet(1) << v)) && g.out_degree(v) != 1) return false;
    return true;
}

// Condition (MT3): every two vertices connect to a common vertex.
inline bool condition_MT3(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        for (int w = v; w < g.size(); ++w)
            if ((tree(g, VertexSet(1) << v) & tree(g, VertexSet(1) << w)) == 0)
                return false;
    return true;
}

// Cofinal: the hereditary saturated closure of every singleton is E^0.
inline bool cofinal(const Graph& g) {
    const VertexSet all = full_set(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (saturated_closure(g, VertexSet(1) << v) != all) return false;
    return true;
}

// True iff some vertex on a directed cycle is reachable from v (v included).
inline bool connects_to_cycle(const Graph& g, int v) {
    return (tree(g, VertexSet(1) << v) & detail::cycle_vertices(g)) != 0;
}

// A line point has neither bifurcations nor cycles anywhere in its tree.
inline VertexSet line_points(const Graph& g) {
    VertexSet cyc = detail::cycle_vertices(g);
    VertexSet out = 0;
    for (int u = 0; u < g.size(); ++u) {
        VertexSet t = tree(g, VertexSet(1) << u);
        bool ok = (t & cyc) == 0;
        for (int w = 0; ok && w < g.size(); ++w)
            if ((t & (VertexSet(1) << w)) && g.out_degree(w) >= 2) ok = false;
        if (ok) out |= VertexSet(1) << u;
    }
    return out;
}

}  // namespace lpa

#endif
