#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicbase/analysis.hpp"
#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"

using namespace cubicbase;

namespace {

PermGroup sym(int n) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    return PermGroup::from_generators(
        {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cyc})});
}

PermGroup dihedral(int n) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup::from_generators(
        {Perm::from_images(rot), Perm::from_images(refl)});
}

PermGroup cyclic(int n) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    return PermGroup::from_generators({Perm::from_images(rot)});
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

bool stabilises_only_identity(const PermGroup& p, const std::vector<int>& x) {
    return p.setwise_stabiliser(x).is_trivial();
}

// cubic, connected, but not vertex-transitive: a prism with one vertex
// truncated into a triangle
Graph truncated_prism() {
    return Graph::from_edges(8, {{0, 1}, {0, 3}, {0, 5}, {1, 4}, {1, 6},
                                 {2, 3}, {2, 4}, {2, 7}, {3, 4}, {5, 6},
                                 {5, 7}, {6, 7}});
}

}  // namespace

TEST_CASE("base size of standard actions") {
    CHECK(base_size(sym(4)).size == 3);
    CHECK(base_size(sym(5)).size == 4);
    CHECK(base_size(cyclic(8)).size == 1);
    CHECK(base_size(dihedral(5)).size == 2);
    CHECK(base_size(PermGroup::trivial(4)).size == 0);

    auto res = base_size(dihedral(5));
    CHECK(dihedral(5).pointwise_stabiliser(res.witness).is_trivial());
}

TEST_CASE("base size respects caps") {
    CHECK_THROWS_AS(base_size(sym(5), 3), error);
    CHECK_THROWS_AS(base_size(sym(8), 200, BigInt(100)), error);
}

TEST_CASE("two point base detection") {
    CHECK(has_base_le2(dihedral(5)).holds);
    CHECK(has_base_le2(cyclic(9)).holds);
    CHECK(!has_base_le2(sym(4)).holds);

    auto res = has_base_le2(dihedral(7));
    REQUIRE(res.holds);
    CHECK(res.witness.size() == 2);
    CHECK(dihedral(7).pointwise_stabiliser(res.witness).is_trivial());

    CHECK_THROWS_AS(has_base_le2(PermGroup::from_generators(
                        {Perm::from_cycles(4, {{0, 1}})})),
                    error);  // intransitive
}

TEST_CASE("classification of named graphs") {
    ClassificationReport rep = classify(table1_graph("Petersen"));
    CHECK(rep.verdict == Verdict::Exceptional);
    CHECK(rep.exceptional_name == "Petersen");
    CHECK(rep.base_size == 3);
    CHECK(rep.aut_order == 120);
}

TEST_CASE("classification of split px graphs") {
    ClassificationReport rep = classify(spx_graph(5, 1));
    CHECK(rep.verdict == Verdict::SplitPX);
    CHECK(rep.r == 5);
    CHECK(rep.s == 1);
    CHECK(rep.base_size >= 3);

    // 2s >= r puts the graph into the small-base bucket instead
    ClassificationReport rep2 = classify(spx_graph(3, 2));
    CHECK(rep2.verdict == Verdict::BaseSizeAtMost2);
}

TEST_CASE("classification of prisms") {
    ClassificationReport rep = classify(circular_ladder(3));
    CHECK(rep.verdict == Verdict::BaseSizeAtMost2);
    CHECK(rep.base_witness.size() <= 2);
    PermGroup aut = automorphism_group(circular_ladder(3));
    CHECK(aut.pointwise_stabiliser(rep.base_witness).is_trivial());
}

TEST_CASE("classification preconditions") {
    CHECK_THROWS_AS(classify(cycle_graph(5)), error);  // not cubic
    Graph two_k4 = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
            {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    CHECK_THROWS_AS(classify(two_k4), error);  // disconnected
    Graph tp = truncated_prism();
    REQUIRE(tp.is_regular(3));
    REQUIRE(is_connected(tp));
    CHECK_THROWS_AS(classify(tp), error);  // not vertex-transitive
}

TEST_CASE("split px recognition") {
    auto rs = is_split_px(spx_graph(6, 2));
    REQUIRE(rs.has_value());
    CHECK(isomorphic(spx_graph(rs->first, rs->second), spx_graph(6, 2)));
    CHECK(!is_split_px(table1_graph("Petersen")).has_value());
    CHECK(!is_split_px(circular_ladder(6)).has_value());
}

TEST_CASE("minimum asymmetric sets") {
    // every subset of the pentagon is preserved by a reflection
    CHECK(!min_asymmetric_set(dihedral(5)).has_value());
    auto x = min_asymmetric_set(cyclic(5));
    REQUIRE(x.has_value());
    CHECK(x->size() == 1);
    auto y = min_asymmetric_set(dihedral(6));
    REQUIRE(y.has_value());
    CHECK(stabilises_only_identity(dihedral(6), *y));
}

TEST_CASE("distinguishing numbers of cycles") {
    CHECK(distinguishing_number(cycle_graph(5)) == 3);
    CHECK(distinguishing_number(cycle_graph(6)) == 2);
    CHECK(distinguishing_number(table1_graph("Petersen")) == 3);
    CHECK(distinguishing_number(table1_graph("K4")) == 4);
    Graph asym = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6},
                                       {6, 0}, {1, 5}});
    if (automorphism_group(asym).is_trivial())
        CHECK(distinguishing_number(asym) == 1);
}

TEST_CASE("distinguishing cost") {
    CHECK(!distinguishing_cost(cycle_graph(5)).has_value());  // number is 3
    auto cost = distinguishing_cost(circular_ladder(3));
    REQUIRE(cost.has_value());
    CHECK(*cost == 3);
}

TEST_CASE("asymmetric sets for transitive 2-groups") {
    for (int n : {2, 4, 8, 16}) {
        auto x = asymmetric_set(cyclic(n));
        CHECK(stabilises_only_identity(cyclic(n), x));
    }
    CHECK_THROWS_AS(asymmetric_set(dihedral(4)), error);  // documented exception
    CHECK_THROWS_AS(asymmetric_set(cyclic(6)), error);    // not a 2-group
    CHECK_THROWS_AS(asymmetric_set(dihedral(8)), error);  // class 3

    auto y = asymmetric_set(cyclic(32));  // degree above 16, recursion path
    CHECK(stabilises_only_identity(cyclic(32), y));
    CHECK(2 * y.size() < 32);
}

TEST_CASE("asymmetric 3-colourings") {
    for (int n : {2, 4, 8}) {
        auto cols = asymmetric_3colourings(cyclic(n));
        REQUIRE(cols.size() == 3);
        for (const auto& c : cols) {
            CHECK(c.num_colours() <= 3);
            bool ok = true;
            for (const Perm& e : cyclic(n).elements()) {
                if (e.is_identity()) continue;
                bool fixes = true;
                for (int v = 0; v < n; ++v) fixes = fixes && c.colours[e[v]] == c.colours[v];
                ok = ok && !fixes;
            }
            CHECK(ok);
        }
    }
    auto d = asymmetric_3colourings(dihedral(4));
    CHECK(d.size() == 3);
    CHECK_THROWS_AS(asymmetric_3colourings(cyclic(3)), error);
}

TEST_CASE("star condition on small groups") {
    PermGroup s3 = sym(3);
    PermGroup a3 = cyclic(3);
    PermGroup p = PermGroup::from_generators({Perm::from_cycles(3, {{0, 1}})});
    StarWitness w = star_check(s3, a3, p);
    CHECK(w.any_witness);
    CHECK(!w.satisfied);

    CHECK_THROWS_AS(star_check(a3, s3, p), error);  // T not inside G
}

TEST_CASE("stabiliser structure report") {
    StabiliserStructure arc = stabiliser_structure_report(table1_graph("Petersen"));
    CHECK(arc.arc_transitive);
    CHECK(arc.stabiliser_order == 12);
    CHECK(arc.divides_48);
    CHECK(arc.pass);

    StabiliserStructure nonarc = stabiliser_structure_report(spx_graph(5, 1));
    CHECK(!nonarc.arc_transitive);
    CHECK(nonarc.is_2_group);
    CHECK(nonarc.nilpotency_class <= 2);
    CHECK(nonarc.exponent <= 4);
    CHECK(nonarc.pass);
}
