#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lpa/orbits.hpp"

using namespace lpa;

TEST_CASE("permutation composition and inverse") {
    Permutation p{{1, 2, 0}};
    Permutation q{{0, 2, 1}};
    CHECK(p.compose(q).map == std::vector<int>{1, 0, 2});
    CHECK(p.compose(p.inverse()).map == Permutation::identity(3).map);
}

TEST_CASE("act is a left action") {
    std::mt19937 rng(7);
    const auto perms = all_permutations(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = Graph::from_code(3, rng() & 0x1ff);
        const auto& p = perms[rng() % perms.size()];
        const auto& q = perms[rng() % perms.size()];
        CHECK(act(act(g, p), q) == act(g, q.compose(p)));
    }
    CHECK_THROWS_AS(act(Graph::from_code(2, 0), Permutation::identity(3)), SizeMismatchError);
}

TEST_CASE("orbit counts by burnside and by enumeration") {
    CHECK(burnside_count(1) == 2);
    CHECK(burnside_count(2) == 10);
    CHECK(burnside_count(3) == 104);
    CHECK(burnside_count(4) == 3044);
    CHECK(orbit_representatives(1).size() == 2);
    CHECK(orbit_representatives(2).size() == 10);
    CHECK(orbit_representatives(3).size() == 104);
    CHECK(orbit_representatives(4).size() == 3044);
}

TEST_CASE("per conjugacy class fixed counts") {
    const auto b3 = burnside_breakdown(3);
    REQUIRE(b3.per_class.size() == 3);
    CHECK(b3.per_class[0] == std::pair<long long, long long>{1, 512});
    CHECK(b3.per_class[1] == std::pair<long long, long long>{3, 32});
    CHECK(b3.per_class[2] == std::pair<long long, long long>{2, 8});

    const auto b4 = burnside_breakdown(4);
    long long order = 0, sum = 0;
    std::multiset<std::pair<long long, long long>> classes(b4.per_class.begin(),
                                                           b4.per_class.end());
    for (const auto& [size, fixed] : b4.per_class) {
        order += size;
        sum += size * fixed;
    }
    CHECK(order == 24);
    CHECK(sum == 24 * 3044);
    CHECK(classes == std::multiset<std::pair<long long, long long>>{
                         {1, 65536}, {6, 1024}, {8, 64}, {3, 256}, {6, 16}});
}

TEST_CASE("orbit-stabilizer sum covers the full matrix space") {
    for (int n = 1; n <= 3; ++n) {
        long long group = 1;
        for (int k = 2; k <= n; ++k) group *= k;
        long long covered = 0;
        for (const Graph& g : orbit_representatives(n)) covered += group / stabilizer_size(g);
        CHECK(covered == (1LL << (n * n)));
    }
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
    std::mt19937 rng(11);
    const auto perms = all_permutations(3);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = Graph::from_code(3, rng() & 0x1ff);
        Graph c = canonical_form(g);
        CHECK(canonical_form(c) == c);
        CHECK(c.code() <= g.code());
        CHECK(canonical_form(act(g, perms[rng() % perms.size()])) == c);
    }
}

TEST_CASE("representatives are canonical and pairwise non-isomorphic") {
    const auto reps = orbit_representatives(3);
    for (const Graph& g : reps) CHECK(canonical_form(g) == g);
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].code() < reps[i].code());
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS(orbit_representatives(0), SizeLimitError);
    CHECK_THROWS_AS(orbit_representatives(5), SizeLimitError);
    CHECK_THROWS_AS(burnside_breakdown(5), SizeLimitError);
}
