#include <catch2/catch_amalgamated.hpp>

#include "lpa/graph.hpp"
#include "lpa/orbits.hpp"

using namespace lpa;

namespace {

std::vector<Graph> all_reps_2_and_3() {
    auto reps = orbit_representatives(2);
    for (auto& g : orbit_representatives(3)) reps.push_back(g);
    return reps;
}

// Definitional oracle, independent of the closure-fixpoint implementation.
bool hereditary_def(const Graph& g, VertexSet x) {
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < g.size(); ++w)
            if ((x & (VertexSet(1) << v)) && g.at(v, w) && !(x & (VertexSet(1) << w)))
                return false;
    return true;
}

bool saturated_def(const Graph& g, VertexSet x) {
    for (int v = 0; v < g.size(); ++v) {
        if ((x & (VertexSet(1) << v)) || is_sink(g, v)) continue;
        bool all_in = true;
        for (int w = 0; w < g.size(); ++w)
            if (g.at(v, w) && !(x & (VertexSet(1) << w))) all_in = false;
        if (all_in) return false;
    }
    return true;
}

// All simple directed cycles, as vertex sets, by DFS from each start vertex.
void cycles_from(const Graph& g, int start, int v, VertexSet path,
                 std::vector<VertexSet>& out) {
    for (int w = 0; w < g.size(); ++w) {
        if (!g.at(v, w)) continue;
        if (w == start) { out.push_back(path); continue; }
        if (w < start || (path & (VertexSet(1) << w))) continue;
        cycles_from(g, start, w, path | (VertexSet(1) << w), out);
    }
}

std::vector<VertexSet> simple_cycles(const Graph& g) {
    std::vector<VertexSet> out;
    for (int v = 0; v < g.size(); ++v) cycles_from(g, v, v, VertexSet(1) << v, out);
    return out;
}

// Condition (L) oracle: every simple cycle has a vertex with out-degree >= 2
// (under binary adjacency, that is exactly an exit).
bool condition_L_oracle(const Graph& g) {
    for (VertexSet c : simple_cycles(g)) {
        bool has_exit = false;
        for (int v = 0; v < g.size(); ++v)
            if ((c & (VertexSet(1) << v)) && g.out_degree(v) >= 2) has_exit = true;
        if (!has_exit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(from_matrix({}), EmptyGraphError);
    CHECK_THROWS_AS(from_matrix({{0, 1}, {0}}), NonSquareError);
    CHECK_THROWS_AS(from_matrix({{2}}), NotSingError);
    CHECK_THROWS_AS(from_matrix({{-1}}), NotSingError);
    CHECK_NOTHROW(from_matrix({{1, 1}, {0, 0}}));
}

TEST_CASE("code round trip and accessors") {
    const Graph g = graph({{1, 1}, {0, 1}});
    CHECK(g.size() == 2);
    CHECK(g.at(0, 1) == 1);
    CHECK(g.at(1, 0) == 0);
    CHECK(Graph::from_code(2, g.code()) == g);
    CHECK(g.edge_count() == 3);
    CHECK(g.loop_count() == 2);
    CHECK(g.out_degree(0) == 2);
}

TEST_CASE("sinks and trees") {
    const Graph g = graph({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(sinks(g) == 0b100);
    CHECK(tree(g, 0b001) == 0b111);
    CHECK(tree(g, 0b010) == 0b110);
    CHECK(is_hereditary(g, 0b100));
    CHECK_FALSE(is_hereditary(g, 0b001));
}

TEST_CASE("hereditary saturated subsets match the definitional filter") {
    for (const Graph& g : all_reps_2_and_3()) {
        std::vector<VertexSet> expected;
        for (VertexSet s = 0; s <= full_set(g.size()); ++s)
            if (hereditary_def(g, s) && saturated_def(g, s)) expected.push_back(s);
        CHECK(hereditary_saturated_subsets(g) == expected);
    }
}

TEST_CASE("saturated closure is the minimal hereditary saturated superset") {
    for (const Graph& g : all_reps_2_and_3()) {
        for (VertexSet s = 0; s <= full_set(g.size()); ++s) {
            VertexSet c = saturated_closure(g, s);
            CHECK((c & s) == s);
            CHECK(hereditary_def(g, c));
            CHECK(saturated_def(g, c));
            for (VertexSet t = 0; t < c; ++t)
                if ((t & s) == s && (t | c) == c && t != c)
                    CHECK_FALSE((hereditary_def(g, t) && saturated_def(g, t)));
        }
    }
}

TEST_CASE("quotient graph") {
    const Graph g = graph({{1, 1}, {0, 0}});
    CHECK_THROWS_AS(quotient_graph(g, 0b001), NotHereditaryError);
    CHECK(quotient_graph(g, 0b010) == graph({{1}}));
    CHECK(quotient_graph(g, 0b011).is_empty());
}

TEST_CASE("connected components") {
    const Graph g = graph({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b001);
    CHECK(comps[1] == 0b110);
    CHECK(induced_subgraph(g, 0b110) == graph({{0, 1}, {0, 0}}));
}

TEST_CASE("condition L matches the simple-cycle oracle") {
    for (const Graph& g : all_reps_2_and_3()) CHECK(condition_L(g) == condition_L_oracle(g));
    for (const Graph& g : orbit_representatives(1)) CHECK(condition_L(g) == condition_L_oracle(g));
}

TEST_CASE("condition NE and L on landmarks") {
    CHECK(condition_L(graph({{1, 1}, {1, 1}})));       // every loop has an exit
    CHECK_FALSE(condition_L(graph({{1}})));            // a loop without exit
    CHECK(condition_NE(graph({{1, 0}, {1, 1}})) == false);
    CHECK(condition_NE(graph({{1, 0}, {1, 0}})));
    CHECK(condition_NE(graph({{0, 1}, {0, 0}})));      // acyclic is vacuously (NE)
}

TEST_CASE("MT3 and cofinality") {
    CHECK(condition_MT3(graph({{1, 1}, {1, 1}})));
    CHECK_FALSE(condition_MT3(graph({{1, 0}, {0, 1}})));
    CHECK(cofinal(graph({{1, 1}, {1, 1}})));
    CHECK_FALSE(cofinal(graph({{1, 0}, {0, 1}})));
    CHECK(cofinal(graph({{1, 1}, {0, 0}})) == false);  // the sink's closure misses the loop
}

TEST_CASE("connects_to_cycle and line points") {
    const Graph t = graph({{1, 1}, {0, 0}});  // loop with an exit to a sink
    CHECK(connects_to_cycle(t, 0));
    CHECK_FALSE(connects_to_cycle(t, 1));
    CHECK(line_points(t) == 0b10);
    const Graph chain = graph({{0, 1}, {0, 0}});
    CHECK(line_points(chain) == 0b11);
    const Graph fork = graph({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}});
    CHECK(line_points(fork) == 0b110);  // the bifurcation vertex is excluded
}
