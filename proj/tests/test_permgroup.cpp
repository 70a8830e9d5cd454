#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classnum/liecount.hpp"
#include "classnum/permgroup.hpp"

using namespace classnum;
using namespace classnum::catalog;

TEST_CASE("permutation basics") {
    const auto p = Permutation::from_cycles(4, {{0, 1, 2}});
    CHECK(p(0) == 1);
    CHECK(p(3) == 3);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    const auto q = Permutation::from_cycles(4, {{0, 1}});
    CHECK(p.then(q)(0) == 0);  // 0 -> 1 -> 0
    CHECK(q.then(p)(0) == 2);  // 0 -> 1 -> 2
}

TEST_CASE("closure enumerates the full group") {
    CHECK(symmetric(3).order() == 6);
    CHECK(PermutationGroup::closure(5, {}).order() == 1);
    CHECK(alternating(4).order() == 12);
    CHECK(dihedral(6).order() == 12);
    CHECK(klein_four().order() == 4);
    CHECK_THROWS_AS(
        PermutationGroup::closure(
            8, {Permutation::from_cycles(8, {{0, 1}}),
                Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})},
            100),
        GroupTooLargeError);
}

TEST_CASE("mathieu groups from the stored generators") {
    const auto m11 = mathieu11();
    CHECK(m11.order() == 7920);
    CHECK(m11.class_count() == 10);
    const auto m12 = mathieu12();
    CHECK(m12.order() == 95040);
    CHECK(m12.class_count() == 15);
    CHECK(mathieu11_in_12().is_subgroup_of(m12));
    // closure orders against the stored order data
    CHECK(Integer(static_cast<unsigned long>(m11.order())) ==
          order(SimpleGroupId::sporadic("M11")));
    CHECK(Integer(static_cast<unsigned long>(m12.order())) ==
          order(SimpleGroupId::sporadic("M12")));
}

TEST_CASE("class counts of small groups") {
    CHECK(symmetric(5).class_count() == 7);
    CHECK(symmetric(4).class_count() == 5);
    CHECK(alternating(4).class_count() == 4);
    CHECK(PermutationGroup::closure(3, {}).class_count() == 1);
}

TEST_CASE("classes partition the group") {
    for (const auto& e : {symmetric(4), alternating(5), dihedral(5), mathieu11()}) {
        std::size_t total = 0;
        for (const auto& cls : e.conjugacy_classes()) {
            total += cls.size();
            CHECK(e.order() % cls.size() == 0);
        }
        CHECK(total == e.order());
    }
}

TEST_CASE("burnside identity over the catalog") {
    for (const auto& e : all()) CHECK(check_burnside_identity(e.group));
}

TEST_CASE("centralizers") {
    const auto c5 = cyclic(5);
    CHECK(c5.centralizer(c5.elements()[1]).order() == 5);
    const auto s4 = symmetric(4);
    const auto x = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    const auto cent = s4.centralizer(x);
    CHECK(cent.order() == 8);  // dihedral of order 8
    CHECK_THROWS_AS(s4.centralizer(Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("cycles and the induced action") {
    const auto x = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    const auto cs = cycles(x);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<unsigned>{0, 1});
    CHECK(cs[1] == std::vector<unsigned>{2, 3});

    // c = (02)(13) swaps the two 2-cycles
    const auto c = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
    const auto induced = action_on_cycles(c, x);
    CHECK(induced == std::vector<std::size_t>{1, 0});

    // the identity's cycles are the fixed points
    const auto id = Permutation::identity(4);
    CHECK(cycles(id).size() == 4);
    const auto g = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    CHECK(action_on_cycles(g, id) == std::vector<std::size_t>{1, 2, 3, 0});

    CHECK_THROWS_AS(action_on_cycles(Permutation::from_cycles(4, {{0, 1}}),
                                     Permutation::from_cycles(4, {{0, 1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("subgroup class inequalities") {
    const auto s4 = symmetric(4);
    const auto a4 = alternating(4);
    CHECK(check_subgroup_inequalities(s4, a4));  // 4/2 <= 5 <= 2*4
    CHECK(check_subgroup_inequalities(s4, s4));  // equality edges
    const auto s5 = symmetric(5);
    const auto c5 = PermutationGroup::closure(
        5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    CHECK(check_subgroup_inequalities(s5, c5));  // 5/24 <= 7 <= 24*5
    CHECK_THROWS_AS(check_subgroup_inequalities(c5, s5), std::invalid_argument);
    for (const auto& [G, H] : subgroup_pairs())
        CHECK(check_subgroup_inequalities(G.group, H.group));
}

TEST_CASE("normal subgroup class inequalities") {
    const auto s4 = symmetric(4);
    const auto v4 = klein_four();
    CHECK(quotient_class_count(s4, v4) == 3);  // S4/V4 = S3
    CHECK(g_classes_of_normal(s4, v4) == 2);
    CHECK(check_normal_inequalities(s4, v4));
    CHECK(check_normal_inequalities(s4, s4));                        // N = G
    CHECK(check_normal_inequalities(s4, PermutationGroup::closure(4, {})));  // N = 1
    const auto a5 = alternating(5);
    const auto c5 = PermutationGroup::closure(
        5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    CHECK_THROWS_AS(check_normal_inequalities(a5, c5), std::invalid_argument);
    for (const auto& [G, N] : normal_pairs())
        CHECK(check_normal_inequalities(G.group, N.group));
}

TEST_CASE("degree-bounded class counts") {
    CHECK(symmetric(4).class_count() == 5);  // boundary: 5^3 = 125 = 5^(r-1)
    CHECK(check_pyber_bound(symmetric(4)));
    CHECK(check_pyber_bound(cyclic(6)));
    for (const auto& e : all())
        if (e.group.degree() <= 8) CHECK(check_pyber_bound(e.group));
}

TEST_CASE("projective realizations have the right orders") {
    CHECK(psl2(4).order() == 60);
    CHECK(psl2(5).order() == 60);
    CHECK(psl2(7).order() == 168);
    CHECK(psl2(9).order() == 360);
    CHECK(psl2(11).order() == 660);
    CHECK(pgl2(9).order() == 720);
    CHECK(pgl2(11).order() == 1320);
    for (unsigned q : {5u, 7u, 9u, 11u}) CHECK(psl2(q).is_subgroup_of(pgl2(q)));
}

TEST_CASE("catalog lookup") {
    CHECK(by_name("C6").order() == 6);
    CHECK(by_name("S3R").is_regular());
    CHECK(by_name("PSL2(7)").order() == 168);
    CHECK(by_name("M11").order() == 7920);
    CHECK_THROWS(by_name("B5"));
}
