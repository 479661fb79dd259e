#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "lpa/shift.hpp"

using namespace lpa;

namespace {

int find_root(std::vector<int>& uf, int x) {
    while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] =
        uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
    return x;
}

// Union-find over one-step shift moves inside the canonical-representative
// universe of size n.
std::vector<int> shift_components(const std::vector<Graph>& reps) {
    std::map<std::uint64_t, int> index;
    for (std::size_t k = 0; k < reps.size(); ++k) index[reps[k].code()] = static_cast<int>(k);
    std::vector<int> uf(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) uf[k] = static_cast<int>(k);
    for (std::size_t k = 0; k < reps.size(); ++k)
        for (const Graph& s : one_step_shifts(reps[k])) {
            int l = index.at(canonical_form(s).code());
            uf[static_cast<std::size_t>(find_root(uf, static_cast<int>(k)))] = find_root(uf, l);
        }
    return uf;
}

}  // namespace

TEST_CASE("inapplicable moves return nothing") {
    const Graph t = graph({{1, 1}, {0, 0}});
    CHECK_FALSE(shift(0, 1, t).has_value());   // row 0 not dominated by row 1
    CHECK_FALSE(shift(1, 0, t).has_value());   // row 1 is zero
    CHECK_FALSE(shift(0, 0, t).has_value());   // i = j
    CHECK_FALSE(shift(0, 2, t).has_value());   // out of range
    CHECK_FALSE(inverse_shift(0, 1, t).has_value());  // entry (1, 0) is zero
}

TEST_CASE("shift arithmetic is exact") {
    const Graph g = graph({{1, 0, 0}, {1, 0, 1}, {1, 0, 1}});
    auto s = shift(1, 2, g);  // row 2 -> row2 - row1 + e1 = (0,1,0)
    REQUIRE(s.has_value());
    CHECK(*s == graph({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}));
    auto back = inverse_shift(1, 2, *s);
    REQUIRE(back.has_value());
    CHECK(*back == g);
}

TEST_CASE("identity-result moves are inapplicable") {
    // A shift that reproduces the input must return nothing.
    const Graph g = graph({{1, 0}, {1, 0}});
    auto s = shift(0, 1, g);  // row1 - row0 + e0 = (1,0) - (1,0) + (1,0) = (1,0): unchanged
    CHECK_FALSE(s.has_value());
}

TEST_CASE("shift and inverse shift are mutually inverse on the full universe") {
    for (int n = 2; n <= 3; ++n)
        for (const Graph& g : orbit_representatives(n))
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    if (auto s = shift(i, j, g)) {
                        auto back = inverse_shift(i, j, *s);
                        REQUIRE(back.has_value());
                        CHECK(*back == g);
                    }
                    if (auto s = inverse_shift(i, j, g)) {
                        auto fwd = shift(i, j, *s);
                        REQUIRE(fwd.has_value());
                        CHECK(*fwd == g);
                    }
                }
}

TEST_CASE("shift equivalence is symmetric and size-checked") {
    const Graph a = graph({{1, 0, 0}, {1, 0, 1}, {1, 0, 1}});
    const Graph b = graph({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(shift_equivalent(a, b));
    CHECK(shift_equivalent(b, a));
    CHECK_THROWS_AS(shift_equivalent(a, graph({{1}})), SizeMismatchError);
}

TEST_CASE("reduction counts: 104 -> 52 and connected pairs -> 5") {
    const auto survivors3 = reduce(orbit_representatives(3));
    CHECK(survivors3.size() == 52);

    std::vector<Graph> connected2;
    for (const Graph& g : orbit_representatives(2))
        if (connected_components(g).size() == 1) connected2.push_back(g);
    CHECK(connected2.size() == 7);
    const auto survivors2 = reduce(connected2);
    REQUIRE(survivors2.size() == 5);
    // The five two-vertex landmarks, up to isomorphism.
    std::set<std::uint64_t> got, expected;
    for (const Graph& g : survivors2) got.insert(canonical_form(g).code());
    for (const Graph& g : {graph({{0, 1}, {0, 0}}), graph({{1, 0}, {1, 0}}),
                           graph({{1, 1}, {0, 0}}), graph({{1, 0}, {1, 1}}),
                           graph({{1, 1}, {1, 1}})})
        expected.insert(canonical_form(g).code());
    CHECK(got == expected);
}

TEST_CASE("no two kept representatives are one-step equivalent") {
    for (int n = 2; n <= 3; ++n) {
        const auto kept = reduce(orbit_representatives(n));
        for (std::size_t i = 0; i < kept.size(); ++i)
            for (std::size_t j = i + 1; j < kept.size(); ++j)
                CHECK_FALSE(shift_equivalent(kept[i], kept[j]));
    }
}

TEST_CASE("every removed representative is transitively shift-connected to a kept one") {
    for (int n = 2; n <= 3; ++n) {
        const auto reps = orbit_representatives(n);
        const auto kept = reduce(reps);
        std::set<std::uint64_t> kept_codes;
        for (const Graph& g : kept) kept_codes.insert(g.code());
        auto uf = shift_components(reps);
        std::set<int> kept_roots;
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (kept_codes.count(reps[k].code()))
                kept_roots.insert(find_root(uf, static_cast<int>(k)));
        for (std::size_t k = 0; k < reps.size(); ++k)
            CHECK(kept_roots.count(find_root(uf, static_cast<int>(k))) == 1);
    }
}

TEST_CASE("transitive closure merges beyond one-step equivalence at n=3") {
    const auto reps = orbit_representatives(3);
    auto uf = shift_components(reps);
    std::set<int> roots;
    for (std::size_t k = 0; k < reps.size(); ++k) roots.insert(find_root(uf, static_cast<int>(k)));
    CHECK(roots.size() == 50);
    CHECK(reduce(reps).size() == 52);
}
