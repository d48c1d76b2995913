#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicbase/graph6.hpp"

using namespace cubicbase;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("graph6 frozen vectors") {
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(complete(3)) == "Bw");
}

TEST_CASE("sparse6 frozen vectors") {
    CHECK(to_sparse6(complete(3)) == ":BcN");
    Graph g = from_graph6_line(":Fa@x^");
    CHECK(g.num_vertices() == 7);
    std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {1, 2}, {5, 6}};
    CHECK(g.edges() == expected);
}

TEST_CASE("graph6 round trips") {
    for (int n = 1; n <= 12; ++n) {
        Graph c = n >= 3 ? cycle(n) : complete(n);
        CHECK(from_graph6_line(to_graph6(c)) == c);
        CHECK(from_graph6_line(to_sparse6(c)) == c);
    }
    Graph k9 = complete(9);
    CHECK(from_graph6_line(to_graph6(k9)) == k9);
    CHECK(from_graph6_line(to_sparse6(k9)) == k9);
}

TEST_CASE("power of two padding in sparse6") {
    // 8 vertices with the last one isolated forces the padding special case
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    CHECK(from_graph6_line(to_sparse6(g)) == g);
}

TEST_CASE("format headers are stripped") {
    CHECK(from_graph6_line(">>graph6<<C~") == complete(4));
    CHECK(from_graph6_line(">>sparse6<<:BcN") == complete(3));
    CHECK(from_graph6_line("C~\n") == complete(4));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(from_graph6_line(""), error);
    CHECK_THROWS_AS(from_graph6_line("C"), error);
    CHECK_THROWS_AS(from_graph6_line("\x01zz"), error);
}
