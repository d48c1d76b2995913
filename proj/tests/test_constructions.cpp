#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"

using namespace cubicbase;

TEST_CASE("px graph shape") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            Graph g = px_graph(r, s);
            CHECK(g.num_vertices() == r * (1 << s));
            CHECK(g.is_regular(4));
            CHECK(is_connected(g));
            // arcs all point forward around the cycle, one per edge
            Digraph d = px_digraph(r, s);
            CHECK(d.num_arcs() == g.num_edges());
        }
    CHECK_THROWS_AS(px_graph(2, 1), error);
    CHECK_THROWS_AS(px_graph(5, 0), error);
    CHECK_THROWS_AS(px_graph(5, 5), error);
}

TEST_CASE("px generator relations") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            PXGenerators gen = px_generators(r, s);
            // rho cycles the tau generators
            for (int i = 0; i < r; ++i)
                CHECK(conjugated(gen.tau[i], gen.rho) == gen.tau[(i + 1) % r]);
            for (int i = 0; i < r; ++i) CHECK(gen.tau[i].order() == 2);
            CHECK(gen.rho.order() == static_cast<std::uint64_t>(r));
            CHECK(gen.sigma.order() == 2);

            Graph g = px_graph(r, s);
            for (const Perm& p : {gen.rho, gen.sigma, gen.tau[0]})
                for (auto [u, v] : g.edges()) CHECK(g.adjacent(p[u], p[v]));
        }
}

TEST_CASE("px group orders") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            CHECK(px_group_K(r, s).order() == BigInt(1) << r);
            CHECK(px_group_Hplus(r, s).order() == (BigInt(1) << r) * r);
            CHECK(px_group_H(r, s).order() == (BigInt(1) << r) * 2 * r);
        }
}

TEST_CASE("full automorphism group of small px graphs") {
    CHECK(automorphism_group(px_graph(5, 2)).order() == (BigInt(1) << 5) * 10);
    // the exceptional column: C(4,1) is K4,4
    CHECK(automorphism_group(px_graph(4, 1)).order() == 1152);
}

TEST_CASE("canonical cycle decomposition") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            Graph g = px_graph(r, s);
            CycleDecomposition c = canonical_px_decomposition(r, s);
            CHECK(c.cycles.size() == static_cast<std::size_t>(r * (1 << (s - 1))));
            std::vector<int> edge_count(g.num_vertices(), 0);
            int total_edges = 0;
            for (const auto& cyc : c.cycles) {
                CHECK(cyc.size() == 4);
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
                    ++edge_count[cyc[i]];
                    ++total_edges;
                }
            }
            CHECK(total_edges == g.num_edges());
            // every vertex lies on exactly two cycles
            for (int v = 0; v < g.num_vertices(); ++v) CHECK(edge_count[v] == 2);
        }
}

TEST_CASE("split graph shape and lifted group") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            Graph g = spx_graph(r, s);
            CHECK(g.num_vertices() == 2 * r * (1 << s));
            CHECK(g.is_regular(3));
            CHECK(is_connected(g));

            PermGroup h = spx_group_H(r, s);
            CHECK(h.order() == (BigInt(1) << r) * 2 * r);
            for (const Perm& p : h.generators())
                for (auto [u, v] : g.edges()) CHECK(g.adjacent(p[u], p[v]));
            CHECK(h.is_transitive());
        }
}

TEST_CASE("merge undoes split") {
    for (int r = 3; r <= 5; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            MergeResult m = merge(spx_graph(r, s), spx_group_H(r, s));
            CHECK(!m.degenerate);
            CHECK(isomorphic(m.graph, px_graph(r, s)));
            CHECK(m.matching.size() == static_cast<std::size_t>(r * (1 << s)));
        }
}

TEST_CASE("merge rejects arc-transitive actions") {
    Graph pet = table1_graph("Petersen");
    CHECK_THROWS_AS(merge(pet, automorphism_group(pet)), error);
}

TEST_CASE("ladders") {
    CHECK(isomorphic(circular_ladder(4), table1_graph("Cube")));
    CHECK(isomorphic(moebius_ladder(2), table1_graph("K4")));
    CHECK(isomorphic(moebius_ladder(3), table1_graph("K3_3")));
    CHECK(automorphism_group(circular_ladder(3)).order() == 12);
    for (int n = 3; n <= 8; ++n) {
        CHECK(circular_ladder(n).is_regular(3));
        CHECK(moebius_ladder(n).is_regular(3));
        CHECK(is_vertex_transitive(circular_ladder(n)));
        CHECK(is_vertex_transitive(moebius_ladder(n)));
    }
    CHECK_THROWS_AS(circular_ladder(2), error);
    CHECK_THROWS_AS(moebius_ladder(1), error);
}

TEST_CASE("named graphs") {
    CHECK(table1_names().size() == 9);
    const std::pair<const char*, int> sizes[] = {
        {"K4", 4},       {"K3_3", 6},     {"Cube", 8},
        {"Petersen", 10}, {"Heawood", 14}, {"Pappus", 18},
        {"Desargues", 20}, {"TutteCoxeter", 30}, {"Foster", 90},
    };
    for (auto [name, n] : sizes) {
        Graph g = table1_graph(name);
        CHECK(g.num_vertices() == n);
        CHECK(g.is_regular(3));
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(table1_graph("Nonesuch"), error);
    CHECK(girth(table1_graph("Petersen")) == 5);
    CHECK(girth(table1_graph("Heawood")) == 6);
}

TEST_CASE("petersen is not a split px graph size match") {
    // Desargues and sC(5,1) share 20 vertices but differ
    CHECK(!isomorphic(table1_graph("Desargues"), spx_graph(5, 1)));
}
