#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicbase/groupops.hpp"

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

}  // namespace

TEST_CASE("fixed point ratio") {
    PermGroup s4 = sym(4);
    CHECK(fixed_point_ratio(s4, Perm::from_cycles(4, {{0, 1}})) == Rational(1, 2));
    CHECK(fixed_point_ratio(s4, Perm(4)) == Rational(1));
    CHECK_THROWS_AS(fixed_point_ratio(dihedral(4), Perm::from_cycles(4, {{0, 1}})),
                    error);
}

TEST_CASE("fpr identity on symmetric group elements") {
    PermGroup s5 = sym(5);
    for (const Perm& x : s5.elements())
        CHECK(fpr_identity_holds(s5, x));
}

TEST_CASE("regular orbit count") {
    PermGroup c4 = PermGroup::from_generators({Perm::from_cycles(4, {{0, 1, 2, 3}})});
    CHECK(regular_orbit_count(c4) == 1);
    // two 4-cycles glued: both orbits regular
    PermGroup c4c4 = PermGroup::from_generators(
        {Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}})});
    CHECK(regular_orbit_count(c4c4) == 2);
    CHECK(regular_orbit_count(sym(4)) == 0);
}

TEST_CASE("block system of a hexagonal dihedral group") {
    PermGroup d12 = dihedral(6);
    BlockSystem bs = block_system(d12, 0, 3);
    CHECK(bs.blocks.size() == 3);
    for (const auto& b : bs.blocks) CHECK(b.size() == 2);
    CHECK(bs.block_action.order() == 6);
}

TEST_CASE("block system can be the whole domain") {
    BlockSystem bs = block_system(dihedral(5), 0, 2);
    CHECK(bs.blocks.size() == 1);
}

TEST_CASE("coset action of Sym(4) on cosets of a dihedral subgroup") {
    PermGroup s4 = sym(4);
    PermGroup d8 = PermGroup::from_generators(
        {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})});
    CHECK(d8.order() == 8);
    PermGroup act = coset_action(s4, d8);
    CHECK(act.degree() == 3);
    CHECK(act.order() == 6);  // kernel is the Klein subgroup
}

TEST_CASE("sylow 2-subgroups") {
    CHECK(sylow2(sym(4)).order() == 8);
    CHECK(sylow2(sym(5)).order() == 8);
    CHECK(sylow2(sym(6)).order() == 16);
    // Frobenius group of order 21 has odd order
    PermGroup f21 = PermGroup::from_generators(
        {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
         Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}})});
    CHECK(f21.order() == 21);
    CHECK(sylow2(f21).is_trivial());
}

TEST_CASE("sylow subgroup is deterministic") {
    auto a = sylow2(sym(5)).generators();
    auto b = sylow2(sym(5)).generators();
    CHECK(a == b);
}

TEST_CASE("nilpotency class") {
    PermGroup c8 = PermGroup::from_generators(
        {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
    CHECK(nilpotency_class(c8) == 1);
    CHECK(nilpotency_class(dihedral(4)) == 2);
    CHECK(nilpotency_class(dihedral(8)) == 3);
    CHECK(nilpotency_class(PermGroup::trivial(3)) == 0);
}

TEST_CASE("exponent") {
    CHECK(exponent(sym(4)) == 12);
    CHECK(exponent(dihedral(4)) == 4);
    PermGroup v4 = PermGroup::from_generators(
        {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    CHECK(exponent(v4) == 2);
}

TEST_CASE("conjugate subgroup") {
    PermGroup p = PermGroup::from_generators({Perm::from_cycles(4, {{0, 1}})});
    Perm t = Perm::from_cycles(4, {{0, 2}, {1, 3}});
    PermGroup q = conjugate(p, t);
    CHECK(q.order() == 2);
    CHECK(q.contains(Perm::from_cycles(4, {{2, 3}})));
}

TEST_CASE("trivial intersections") {
    PermGroup a = PermGroup::from_generators({Perm::from_cycles(4, {{0, 1}})});
    PermGroup b = PermGroup::from_generators({Perm::from_cycles(4, {{2, 3}})});
    CHECK(intersection_trivial(a, b));
    PermGroup v4 = PermGroup::from_generators(
        {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    PermGroup c = PermGroup::from_generators({Perm::from_cycles(4, {{0, 1}, {2, 3}})});
    CHECK(!intersection_trivial(c, v4));
}

TEST_CASE("double coset separation in Sym(3)") {
    PermGroup p = PermGroup::from_generators({Perm::from_cycles(3, {{0, 1}})});
    Perm e(3);
    Perm t = Perm::from_cycles(3, {{0, 2}});
    CHECK(double_cosets_distinct(p, e, t));
    // (0 1)(0 2)(0 1) lies in P (0 2) P
    Perm same = Perm::from_cycles(3, {{0, 1}}) * t * Perm::from_cycles(3, {{0, 1}});
    CHECK(!double_cosets_distinct(p, t, same));
}
