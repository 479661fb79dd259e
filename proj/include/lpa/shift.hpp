#ifndef LPA_SHIFT_HPP
#define LPA_SHIFT_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/orbits.hpp"

namespace lpa {

namespace detail {

inline bool row_nonzero(const Graph& m, int i) {
    for (int k = 0; k < m.size(); ++k)
        if (m.at(i, k)) return true;
    return false;
}

}  // namespace detail

// Shift move from vertex i to vertex j: row j becomes row j - row i + e_i.
// Applicable when row i is non-zero, row i is dominated entrywise by row j,
// and the result is a binary matrix distinct from the input. Inapplicable
// moves return nothing rather than the input unchanged.
inline std::optional<Graph> shift(int i, int j, const Graph& m) {
    const int n = m.size();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) return std::nullopt;
    if (!detail::row_nonzero(m, i)) return std::nullopt;
    for (int k = 0; k < n; ++k)
        if (m.at(i, k) > m.at(j, k)) return std::nullopt;
    std::vector<std::uint8_t> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            int v = m.at(r, k);
            if (r == j) v = m.at(j, k) - m.at(i, k) + (k == i ? 1 : 0);
            if (v < 0 || v > 1) return std::nullopt;
            e.push_back(static_cast<std::uint8_t>(v));
        }
    Graph out(n, std::move(e));
    if (out == m) return std::nullopt;
    return out;
}

// Unique preimage x with shift(i, j, x) = m, when one exists: row j of x is
// row j of m + row i of m with entry (j, i) decremented first.
inline std::optional<Graph> inverse_shift(int i, int j, const Graph& m) {
    const int n = m.size();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) return std::nullopt;
    if (m.at(j, i) < 1) return std::nullopt;
    std::vector<std::uint8_t> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            int v = m.at(r, k);
            if (r == j) v = m.at(j, k) + m.at(i, k) - (k == i ? 1 : 0);
            if (v < 0 || v > 1) return std::nullopt;
            e.push_back(static_cast<std::uint8_t>(v));
        }
    Graph x(n, std::move(e));
    auto back = shift(i, j, x);
    if (!back || *back != m) return std::nullopt;
    return x;
}

// All matrices reachable from m by a single shift or inverse shift, over
// every ordered vertex pair.
inline std::vector<Graph> one_step_shifts(const Graph& m) {
    std::set<Graph> out;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            if (i == j) continue;
            if (auto s = shift(i, j, m)) out.insert(*s);
            if (auto s = inverse_shift(i, j, m)) out.insert(*s);
        }
    return {out.begin(), out.end()};
}

// True iff a single shift or inverse shift of x lands in the isomorphism
// orbit of y, or vice versa.
inline bool shift_equivalent(const Graph& x, const Graph& y) {
    if (x.size() != y.size()) throw SizeMismatchError();
    const Graph cx = canonical_form(x), cy = canonical_form(y);
    for (const auto& s : one_step_shifts(x))
        if (canonical_form(s) == cy) return true;
    for (const auto& s : one_step_shifts(y))
        if (canonical_form(s) == cx) return true;
    return false;
}

// Removes representatives until no two remaining ones are shift-equivalent.
// The sweep drops the earlier element of a matched pair; sweep order is
// ascending (loop count, packed code) so that, within each matched pair,
// the representative with more loops survives.
inline std::vector<Graph> reduce(std::vector<Graph> reps) {
    std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
        if (a.loop_count() != b.loop_count()) return a.loop_count() < b.loop_count();
        return a.code() < b.code();
    });
    std::size_t k = 0;
    while (k < reps.size()) {
        bool dropped = false;
        for (std::size_t l = k + 1; l < reps.size(); ++l) {
            if (shift_equivalent(reps[k], reps[l])) {
                reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(k));
                dropped = true;
                break;
            }
        }
        if (!dropped) ++k;
    }
    std::sort(reps.begin(), reps.end(),
              [](const Graph& a, const Graph& b) { return a.code() < b.code(); });
    return reps;
}

}  // namespace lpa

#endif
