#ifndef LPA_ORBITS_HPP
#define LPA_ORBITS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// A permutation of {0..n-1}; map[v] is the image of v.
struct Permutation {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int v) const { return map[static_cast<std::size_t>(v)]; }

    static Permutation identity(int n) {
        Permutation p;
        p.map.resize(static_cast<std::size_t>(n));
        std::iota(p.map.begin(), p.map.end(), 0);
        return p;
    }

    Permutation inverse() const {
        Permutation p = identity(size());
        for (int v = 0; v < size(); ++v) p.map[static_cast<std::size_t>(map[v])] = v;
        return p;
    }

    // (a.compose(b))(v) = a(b(v)).
    Permutation compose(const Permutation& b) const {
        Permutation p;
        p.map.reserve(map.size());
        for (int v : b.map) p.map.push_back(map[static_cast<std::size_t>(v)]);
        return p;
    }
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.map.begin(), p.map.end()));
    return out;
}

// Simultaneous row/column permutation: result(p(i), p(j)) = m(i, j), so the
// vertex formerly called i is now called p(i). This is a left action:
// act(act(m, p), q) = act(m, q.compose(p)).
inline Graph act(const Graph& m, const Permutation& p) {
    if (p.size() != m.size()) throw SizeMismatchError();
    const int n = m.size();
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(p(i)) * n + p(j)] =
                static_cast<std::uint8_t>(m.at(i, j));
    return Graph(n, std::move(e));
}

// Lexicographic minimum (row-major) over all n! conjugates. Two graphs are
// isomorphic iff their canonical forms are equal.
inline Graph canonical_form(const Graph& m) {
    Graph best = m;
    Permutation p = Permutation::identity(m.size());
    while (std::next_permutation(p.map.begin(), p.map.end())) {
        Graph g = act(m, p);
        if (g.code() < best.code()) best = g;
    }
    return best;
}

inline int stabilizer_size(const Graph& m) {
    int c = 0;
    for (const auto& p : all_permutations(m.size()))
        if (act(m, p) == m) ++c;
    return c;
}

// One lex-minimal representative per conjugation orbit, in increasing code
// order. Exhaustive over all 2^(n*n) matrices; n > 4 needs the explicit
// override (n = 5 takes a while but stays exact).
inline std::vector<Graph> orbit_representatives(int n, bool allow_large = false) {
    if (n < 1) throw SizeLimitError("vertex count must be at least 1");
    if (n > 4 && !(allow_large && n == 5))
        throw SizeLimitError("orbit enumeration supports at most 4 vertices (5 with override)");
    const auto perms = all_permutations(n);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t(1) << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        Graph g = Graph::from_code(n, code);
        bool minimal = true;
        for (const auto& p : perms) {
            if (act(g, p).code() < code) { minimal = false; break; }
        }
        if (minimal) out.push_back(std::move(g));
    }
    return out;
}

struct BurnsideBreakdown {
    // One entry per conjugacy class of S_n: (class size, fixed matrix count).
    std::vector<std::pair<long long, long long>> per_class;
    long long total = 0;  // orbit count
};

// Fixed matrices of a permutation = 2^(number of cycles of the induced
// action on ordered vertex pairs).
inline long long fixed_count(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (seen[static_cast<std::size_t>(i) * n + j]) continue;
            ++cycles;
            int a = i, b = j;
            while (!seen[static_cast<std::size_t>(a) * n + b]) {
                seen[static_cast<std::size_t>(a) * n + b] = 1;
                int na = p(a), nb = p(b);
                a = na; b = nb;
            }
        }
    return 1LL << cycles;
}

inline std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> lens;
    std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
    for (int v = 0; v < p.size(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        int len = 0, w = v;
        while (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            w = p(w);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
}

inline BurnsideBreakdown burnside_breakdown(int n) {
    if (n < 1 || n > 4) throw SizeLimitError("burnside count supports 1 to 4 vertices");
    // Group permutations by cycle type; classes ordered by first appearance
    // in lexicographic permutation order (identity first).
    std::vector<std::vector<int>> types;
    std::vector<std::pair<long long, long long>> classes;
    long long sum = 0, order = 0;
    for (const auto& p : all_permutations(n)) {
        ++order;
        auto t = cycle_type(p);
        long long f = fixed_count(p);
        sum += f;
        auto it = std::find(types.begin(), types.end(), t);
        if (it == types.end()) {
            types.push_back(t);
            classes.emplace_back(1, f);
        } else {
            ++classes[static_cast<std::size_t>(it - types.begin())].first;
        }
    }
    BurnsideBreakdown b;
    b.per_class = std::move(classes);
    b.total = sum / order;
    return b;
}

inline long long burnside_count(int n) { return burnside_breakdown(n).total; }

}  // namespace lpa

#endif
