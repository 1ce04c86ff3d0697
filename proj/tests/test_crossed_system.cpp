#include "crossed_forge/crossed_system.hpp"

#include "corrupted_systems.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace crossed_forge;

TEST_CASE("standard builders produce valid systems") {
    auto gr = CrossedSystem::group_ring(Ring::modular(7), Group::cyclic(3));
    CHECK(verify_crossed_system(*gr).valid());
    CHECK(gr->sigma_is_trivial());
    CHECK(gr->alpha_is_trivial());

    CHECK(verify_crossed_system(*cf_test::f3_torus()).valid());
    CHECK(verify_crossed_system(*cf_test::f4_frobenius()).valid());
    CHECK(verify_crossed_system(*cf_test::twisted_z5_c2()).valid());
    CHECK(verify_crossed_system(*cf_test::z3_s3_group_ring()).valid());
}

TEST_CASE("validated builders reject broken tables") {
    Ring::Ptr A = Ring::modular(5);
    Group::Ptr G = Group::cyclic(2);
    std::vector<RingElem> alpha{A->one(), A->one(), A->one(), A->zero()};
    CHECK_THROWS_AS(CrossedSystem::twisted_group_ring(A, G, alpha), ValidationError);
}

TEST_CASE("the corrupted corpus fails with the right witnesses") {
    for (const auto& c : cf_test::corrupted_systems()) {
        CAPTURE(c.name);
        ValidationReport rep = verify_crossed_system(*c.system);
        CHECK_FALSE(rep.valid());
        bool found = std::any_of(rep.issues.begin(), rep.issues.end(), [&](const ValidationIssue& i) {
            return i.condition == c.expected_condition;
        });
        CHECK_MESSAGE(found, c.name, ": expected condition ", c.expected_condition);
    }
}

TEST_CASE("witness count per condition is bounded") {
    // sigma_e wrong produces many action-compatibility witnesses; at most 10 survive
    Ring::Ptr A = Ring::modular(5);
    Group::Ptr G = Group::cyclic(4);
    std::vector<RingElem> alpha(16, A->zero());
    auto sys = CrossedSystem::make_unchecked(A, G, {}, alpha);
    ValidationReport rep = verify_crossed_system(*sys);
    std::size_t alpha_unit = 0;
    for (const auto& i : rep.issues)
        if (i.condition == "alpha-unit") ++alpha_unit;
    CHECK(alpha_unit == 10);
}

TEST_CASE("integers-group systems validate by construction shape") {
    auto sys = cf_test::rational_torus(Rational(2));
    CHECK(verify_crossed_system(*sys).valid());
    // only the trivial cocycle is representable there
    Ring::Ptr L = Ring::laurent_rational();
    CHECK_THROWS_AS(CrossedSystem::make_unchecked(L, Group::integers(),
                                                  {RingAutomorphism::identity(L)}, {L->one()}),
                    Error);
}

TEST_CASE("fixed rings") {
    auto gr = CrossedSystem::group_ring(Ring::modular(6), Group::cyclic(3));
    CHECK(fixed_ring(gr).size() == 6); // trivial action fixes everything

    auto f4 = cf_test::f4_frobenius();
    auto fixed = fixed_ring(f4);
    CHECK(fixed == cf_test::parse_set(f4->ring(), {"0", "1"}));

    auto torus = cf_test::f3_torus();
    auto fixed_torus = fixed_ring(torus);
    CHECK(fixed_torus ==
          cf_test::parse_set(torus->ring(),
                             {"0", "1", "2", "x^2", "2x^2", "1 + x^2", "1 + 2x^2", "2 + x^2",
                              "2 + 2x^2"}));
}

TEST_CASE("the fixed ring is a unital subring") {
    for (const auto& sys : {cf_test::f3_torus(), cf_test::f4_frobenius()}) {
        auto fixed = fixed_ring(sys);
        std::set<RingElem> set(fixed.begin(), fixed.end());
        CHECK(set.count(sys->ring()->zero()) == 1);
        CHECK(set.count(sys->ring()->one()) == 1);
        for (const auto& a : fixed)
            for (const auto& b : fixed) {
                CHECK(set.count(a + b) == 1);
                CHECK(set.count(a * b) == 1);
            }
    }
}

TEST_CASE("sigma kernels") {
    auto gr = CrossedSystem::group_ring(Ring::modular(5), Group::cyclic(4));
    CHECK(sigma_kernel(gr).elements.size() == 4); // trivial action: everything

    auto torus_q2 = cf_test::rational_torus(Rational(2));
    CHECK(*sigma_kernel(torus_q2).modulus == 0); // 2 is not a root of unity
    CHECK(sigma_kernel(torus_q2).is_trivial(*torus_q2));

    auto torus_qm1 = cf_test::rational_torus(Rational(-1));
    CHECK(*sigma_kernel(torus_qm1).modulus == 2);

    // x -> 2x over F_3 has order 2 inside C4
    Ring::Ptr A = Ring::poly_quotient(3, {0, 0, 0, 1});
    auto sys = CrossedSystem::cyclic_action(
        A, Group::cyclic(4), RingAutomorphism::from_generator_images(A, {A->parse("2x")}));
    auto ker = sigma_kernel(sys);
    REQUIRE(ker.elements.size() == 2);
    CHECK(ker.elements[0].is_identity());
    CHECK(sys->group()->to_text(ker.elements[1]) == "2");
}

TEST_CASE("the action is a homomorphism over commutative bases") {
    for (const auto& sys : {cf_test::f3_torus(), cf_test::f4_frobenius(), cf_test::twisted_z5_c2(),
                            cf_test::z3_s3_group_ring()}) {
        const auto& G = sys->group();
        for (std::uint64_t i = 0; i < G->order(); ++i)
            for (std::uint64_t j = 0; j < G->order(); ++j) {
                GroupElem a = G->at(i), b = G->at(j);
                CHECK(sys->sigma(a).compose(sys->sigma(b)) == sys->sigma(a * b));
            }
    }
}

TEST_CASE("the kernel is a normal subgroup when sigma is a homomorphism") {
    for (const auto& sys : {cf_test::f3_torus(), cf_test::z3_s3_group_ring()}) {
        auto ker = sigma_kernel(sys);
        CHECK(is_normal_subgroup(sys->group(), ker.elements));
    }
}

TEST_CASE("product size") {
    CHECK(cf_test::f3_torus()->product_size() == 729);
    CHECK(cf_test::z4_c2_group_ring()->product_size() == 16);
    CHECK_THROWS_AS(cf_test::rational_torus(Rational(2))->product_size(), UnsupportedError);
}
