#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classnum/liecount.hpp"
#include "classnum/permgroup.hpp"
#include "support/oracles.hpp"

using namespace classnum;

namespace {

SimpleGroupId psl2(unsigned long q) { return SimpleGroupId::lie(Family::psl, 2, q); }

}  // namespace

TEST_CASE("exact class-number formulas") {
    CHECK(k_exact(psl2(11)).value == 8);
    CHECK(k_exact(SimpleGroupId::lie(Family::pgl, 2, 9)).value == 11);
    CHECK(k_exact(SimpleGroupId::lie(Family::psu, 4, 2)).value == 20);
    CHECK(k_exact(SimpleGroupId::lie(Family::su, 3, 3)).value == 14);
    CHECK(k_exact(SimpleGroupId::lie(Family::sl, 4, 2)).value == 14);
    CHECK(k_exact(SimpleGroupId::suzuki(8)).value == 11);
    CHECK(k_exact(SimpleGroupId::alternating(8)).value == 14);
    CHECK(k_exact(SimpleGroupId::symmetric(8)).value == 22);
    CHECK(k_exact(psl2(11)).kind == CountKind::exact);
    CHECK(k_exact(SimpleGroupId::lie(Family::pgl, 2, 9)).provenance ==
          "PGL2-formula");
}

TEST_CASE("formula registry conditions are strict") {
    // PSp4(q) for odd q is a census-only fact, not the Sp4 formula
    CHECK_THROWS_AS(k_exact(SimpleGroupId::lie(Family::psp, 4, 3)), NoFormulaError);
    CHECK_THROWS_AS(k_exact(SimpleGroupId::lie(Family::sl, 4, 3)), NoFormulaError);
    CHECK_THROWS_AS(k_exact(SimpleGroupId::lie(Family::psl, 3, 5)), NoFormulaError);
    CHECK_THROWS_AS(k_exact(psl2(11).with_decoration(".2")), NoFormulaError);
    CHECK(k_exact(SimpleGroupId::lie(Family::sp, 4, 3)).value == 34);  // Sp4, not PSp4
    CHECK(k_exact(SimpleGroupId::lie(Family::sp, 4, 4)).value == 27);
}

TEST_CASE("id validation") {
    CHECK_THROWS_AS(SimpleGroupId::lie(Family::psl, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGroupId::lie(Family::psu, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGroupId::lie(Family::psu, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGroupId::suzuki(4), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGroupId::suzuki(16), std::invalid_argument);
    CHECK_NOTHROW(SimpleGroupId::suzuki(32));
}

TEST_CASE("upper bounds") {
    const auto all = k_bound_all(SimpleGroupId::lie(Family::psl, 4, 2));
    bool found_100qr = false;
    for (const auto& b : all)
        if (b.provenance == "FG-100qr") {
            found_100qr = true;
            CHECK(b.value == 800);
        }
    CHECK(found_100qr);
    CHECK(k_bound(SimpleGroupId::lie(Family::psl, 4, 2)).value <= 800);

    // Suzuki q=8, rank 1: min(27.2*8, 8+68) = 76
    const auto sz = k_bound(SimpleGroupId::suzuki(8));
    CHECK(sz.value == 76);
    CHECK(k_exact(SimpleGroupId::suzuki(8)).value <= sz.value);
    CHECK_THROWS_AS(k_bound(SimpleGroupId::alternating(7)), NoFormulaError);
}

TEST_CASE("exact values stay under every applicable bound") {
    for (unsigned long q = 4; q <= 64; ++q) {
        if (!is_prime_power(q)) continue;
        for (auto fam : {Family::psl, Family::pgl}) {
            const auto id = SimpleGroupId::lie(fam, 2, q);
            const Integer v = k_exact(id).value;
            for (const auto& b : k_bound_all(id)) CHECK(v <= b.value);
        }
        const auto sp4 = SimpleGroupId::lie(Family::sp, 4, q);
        for (const auto& b : k_bound_all(sp4)) CHECK(k_exact(sp4).value <= b.value);
        const auto su3 = SimpleGroupId::lie(Family::psu, 3, q);
        for (const auto& b : k_bound_all(su3)) CHECK(k_exact(su3).value <= b.value);
        const auto su4 = SimpleGroupId::lie(Family::psu, 4, q);
        for (const auto& b : k_bound_all(su4)) CHECK(k_exact(su4).value <= b.value);
    }
    for (unsigned long q : {8, 32}) {
        const auto sz = SimpleGroupId::suzuki(q);
        for (const auto& b : k_bound_all(sz)) CHECK(k_exact(sz).value <= b.value);
    }
}

TEST_CASE("orders") {
    CHECK(order(SimpleGroupId::alternating(5)) == 60);
    CHECK(order(psl2(7)) == 168);
    CHECK(order(SimpleGroupId::sporadic("M12")) == 95040);
    CHECK(order(SimpleGroupId::lie(Family::omega_minus, 8, 2)) == 197406720);
    CHECK(order(SimpleGroupId::lie(Family::sp, 6, 2)) == 1451520);
    CHECK(order(SimpleGroupId::lie(Family::psp, 4, 3)) ==
          order(SimpleGroupId::lie(Family::psu, 4, 2)));
    CHECK(order(psl2(4)) == order(SimpleGroupId::alternating(5)));
    CHECK(order(SimpleGroupId::lie(Family::psl, 4, 2)) ==
          order(SimpleGroupId::alternating(8)));
    CHECK_THROWS_AS(order(SimpleGroupId::sporadic("J1")), NoFormulaError);
}

TEST_CASE("minimal degrees") {
    CHECK(minimal_degree(SimpleGroupId::suzuki(8)) == 65);
    CHECK(minimal_degree(SimpleGroupId::lie(Family::psu, 4, 2)) == 27);
    CHECK(minimal_degree(SimpleGroupId::alternating(7)) == 7);
    CHECK(minimal_degree(psl2(9)) == 6);
    CHECK(minimal_degree(psl2(11)) == 11);
    CHECK(minimal_degree(psl2(13)) == 14);
    CHECK(minimal_degree(SimpleGroupId::lie(Family::psu, 3, 5)) == 50);
    CHECK(minimal_degree(SimpleGroupId::sporadic("M24")) == 24);
    CHECK_THROWS_AS(minimal_degree(SimpleGroupId::lie(Family::psu, 5, 3)),
                    NoFormulaError);
}

TEST_CASE("minimal degree squared stays below the order") {
    std::vector<SimpleGroupId> registry = {
        SimpleGroupId::suzuki(8),
        SimpleGroupId::suzuki(32),
        SimpleGroupId::lie(Family::psu, 4, 2),
        SimpleGroupId::lie(Family::psu, 4, 3),
        SimpleGroupId::lie(Family::psu, 3, 3),
        SimpleGroupId::lie(Family::psu, 3, 5),
        SimpleGroupId::lie(Family::psp, 4, 3),
        SimpleGroupId::lie(Family::sp, 6, 2),
        SimpleGroupId::lie(Family::sp, 8, 2),
        SimpleGroupId::lie(Family::omega_plus, 8, 2),
        SimpleGroupId::lie(Family::omega_minus, 8, 2),
        SimpleGroupId::sporadic("M11"),
        SimpleGroupId::sporadic("M12"),
        SimpleGroupId::sporadic("M22"),
        SimpleGroupId::sporadic("M23"),
        SimpleGroupId::sporadic("M24"),
    };
    for (unsigned long d = 5; d <= 20; ++d)
        registry.push_back(SimpleGroupId::alternating(d));
    for (unsigned long q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27})
        registry.push_back(psl2(q));
    for (const auto& id : registry) {
        const Integer p = minimal_degree(id);
        CHECK(p * p <= order(id));
    }
}

TEST_CASE("degrees of the table actions") {
    CHECK(degree_projective_points(4, 2) == 15);
    CHECK(degree_k_subsets(8, 4 - 1) == 56);
    CHECK(degree_k_subsets(8, 2) == 28);
    CHECK(degree_flags(3, 2) == 21);
    CHECK(degree_flags(3, 2) == oracles::count_flags_pg22());
    CHECK(degree_two_subspaces(4, 2) == 35);
    CHECK(degree_two_subspaces(4, 2) == oracles::count_two_subspaces_gf2(4));
    CHECK(degree_imprimitive(6, 3, 2) == 10);
    CHECK(degree_imprimitive(6, 2, 3) == 15);
    CHECK(degree_imprimitive(6, 3, 2) == oracles::count_block_systems(6, 3, 2));
    CHECK(degree_imprimitive(6, 2, 3) == oracles::count_block_systems(6, 2, 3));
    CHECK(degree_imprimitive(8, 4, 2) == oracles::count_block_systems(8, 4, 2));
    CHECK(degree_symplectic_index(2, 3) == 117);
    CHECK_THROWS_AS(degree_k_subsets(8, 4), std::invalid_argument);
    CHECK_THROWS_AS(degree_imprimitive(6, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(degree_flags(2, 2), std::invalid_argument);
}

TEST_CASE("flags outnumber 2-subspaces") {
    for (unsigned long d = 3; d <= 10; ++d)
        for (unsigned long q : {2, 3, 4, 5})
            CHECK(degree_flags(d, q) > degree_two_subspaces(d, q));
}

TEST_CASE("4k^2 against the socle order") {
    CHECK(!check_4k2(SimpleGroupId::alternating(5), Integer(7)));
    CHECK(check_4k2(psl2(13), Integer(9)));
    CHECK(!check_4k2(psl2(11), Integer(13)));
}

TEST_CASE("canonical socles") {
    CHECK(canonical_socle(psl2(4)).same_group(SimpleGroupId::alternating(5)));
    CHECK(canonical_socle(psl2(5)).same_group(SimpleGroupId::alternating(5)));
    CHECK(canonical_socle(psl2(9)).same_group(SimpleGroupId::alternating(6)));
    CHECK(canonical_socle(SimpleGroupId::lie(Family::sl, 3, 2)).same_group(psl2(7)));
    CHECK(canonical_socle(SimpleGroupId::lie(Family::psl, 4, 2))
              .same_group(SimpleGroupId::alternating(8)));
    CHECK(canonical_socle(SimpleGroupId::lie(Family::psp, 4, 3))
              .same_group(SimpleGroupId::lie(Family::psu, 4, 2)));
    CHECK(canonical_socle(SimpleGroupId::lie(Family::pgl, 2, 7)).same_group(psl2(7)));
    CHECK(canonical_socle(psl2(13)).same_group(psl2(13)));
}

TEST_CASE("formula matches the permutation oracle for tiny linear groups") {
    for (unsigned q : {4u, 5u, 7u, 9u, 11u}) {
        CHECK(k_exact(psl2(q)).value == catalog::psl2(q).class_count());
        CHECK(k_exact(SimpleGroupId::lie(Family::pgl, 2, q)).value ==
              catalog::pgl2(q).class_count());
    }
}
