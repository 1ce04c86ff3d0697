#include "crossed_forge/ring.hpp"
#include "crossed_forge/ring_automorphism.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace crossed_forge;

namespace {

void check_axioms_exhaustive(const Ring::Ptr& R) {
    auto elems = R->elements();
    for (const auto& a : elems) {
        CHECK(a + R->zero() == a);
        CHECK(a * R->one() == a);
        CHECK(R->one() * a == a);
        CHECK((a + (-a)).is_zero());
        for (const auto& b : elems) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a); // the whole catalog is commutative
            for (const auto& c : elems) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

void check_axioms_random(const Ring::Ptr& R, int triples) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < triples; ++i) {
        RingElem a = cf_test::random_ring_elem(R, rng);
        RingElem b = cf_test::random_ring_elem(R, rng);
        RingElem c = cf_test::random_ring_elem(R, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

} // namespace

TEST_CASE("ring arithmetic matches the worked examples") {
    auto z4 = Ring::modular(4);
    CHECK(z4->parse("3") + z4->parse("2") == z4->parse("1"));

    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    CHECK((f3x3->parse("x^2") * f3x3->parse("x")).is_zero());

    auto laurent = Ring::laurent_rational();
    CHECK(laurent->parse("x + x^-1") * laurent->parse("x") == laurent->parse("x^2 + 1"));
}

TEST_CASE("mixed-owner operands are rejected") {
    auto z4 = Ring::modular(4);
    auto z5 = Ring::modular(5);
    CHECK_THROWS_AS((void)(z4->one() + z5->one()), DomainMismatchError);
}

TEST_CASE("units") {
    auto z4 = Ring::modular(4);
    CHECK(z4->parse("3").is_unit());
    CHECK(*z4->parse("3").inverse() == z4->parse("3"));
    CHECK_FALSE(z4->parse("2").is_unit());

    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    CHECK_FALSE(f3x3->parse("x").is_unit()); // nilpotent
    CHECK(f3x3->parse("1 + x").is_unit());

    auto laurent = Ring::laurent_rational();
    RingElem m = laurent->parse("2x^-5");
    CHECK(m.is_unit());
    CHECK(*m.inverse() == laurent->parse("1/2x^5"));
    CHECK_FALSE(laurent->parse("1 + x").is_unit());
}

TEST_CASE("annihilator by exhaustive enumeration") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    // ann(x^2) is the ideal generated by x: everything with zero constant term
    auto expected = cf_test::parse_set(
        f3x3, {"0", "x", "2x", "x^2", "2x^2", "x + x^2", "x + 2x^2", "2x + x^2", "2x + 2x^2"});
    auto got = annihilator(f3x3->parse("x^2"));
    CHECK(got == expected);

    auto z4 = Ring::modular(4);
    CHECK(annihilator(z4->parse("2")) == cf_test::parse_set(z4, {"0", "2"}));
    CHECK(annihilator(z4->one()) == cf_test::parse_set(z4, {"0"}));

    CHECK_THROWS_AS(annihilator(Ring::laurent_rational()->one()), UnsupportedError);
}

TEST_CASE("annihilator is an ideal") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    for (const auto& probe : {f3x3->parse("x^2"), f3x3->parse("x"), f3x3->parse("2")}) {
        auto ann = annihilator(probe);
        std::set<RingElem> set(ann.begin(), ann.end());
        for (const auto& a : ann)
            for (const auto& b : ann) CHECK(set.count(a + b) == 1);
        for (const auto& a : ann)
            for (const auto& r : f3x3->elements()) CHECK(set.count(r * a) == 1);
    }
}

TEST_CASE("zero-divisor sets") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    // precisely the polynomials with zero constant term
    std::vector<RingElem> expected;
    for (const auto& a : f3x3->elements()) {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        if (v[0] == 0) expected.push_back(a);
    }
    CHECK(zero_divisor_set(f3x3) == expected);
    CHECK(expected.size() == 9);

    CHECK(zero_divisor_set(Ring::modular(5)) == cf_test::parse_set(Ring::modular(5), {"0"}));

    // independent pair-search oracle on Z/4
    auto z4 = Ring::modular(4);
    std::vector<RingElem> oracle;
    for (const auto& a : z4->elements()) {
        bool zd = false;
        for (const auto& b : z4->elements())
            if (!b.is_zero() && (a * b).is_zero()) zd = true;
        if (zd) oracle.push_back(a);
    }
    CHECK(zero_divisor_set(z4) == oracle);
    CHECK(oracle == cf_test::parse_set(z4, {"0", "2"}));
}

TEST_CASE("unit xor zero-divisor on finite commutative rings") {
    for (const auto& R : {Ring::modular(4), Ring::modular(5), Ring::modular(6),
                          Ring::poly_quotient(3, {0, 0, 0, 1}), Ring::finite_field(2, 2),
                          Ring::function_ring(2, 3),
                          Ring::truncated_multivar(3, 2, TruncationKind::total_degree, 2)}) {
        std::set<RingElem> zd;
        for (const auto& z : zero_divisor_set(R)) zd.insert(z);
        for (const auto& a : R->elements()) CHECK(a.is_unit() != (zd.count(a) == 1));
    }
}

TEST_CASE("ring axioms, exhaustive on small rings and random on larger ones") {
    check_axioms_exhaustive(Ring::modular(6));
    check_axioms_exhaustive(Ring::poly_quotient(3, {0, 0, 0, 1}));
    check_axioms_exhaustive(Ring::finite_field(2, 2));
    check_axioms_exhaustive(Ring::function_ring(2, 3));
    check_axioms_exhaustive(Ring::truncated_multivar(3, 2, TruncationKind::total_degree, 2));
    check_axioms_random(Ring::modular(101), 1000);
    check_axioms_random(Ring::poly_quotient(5, {2, 0, 0, 1}), 1000);
    check_axioms_random(Ring::finite_field(3, 4), 1000);
}

TEST_CASE("enumeration round trip and canonical order") {
    for (const auto& R : {Ring::modular(7), Ring::poly_quotient(3, {0, 0, 0, 1}),
                          Ring::function_ring(3, 2),
                          Ring::truncated_multivar(2, 2, TruncationKind::var_power, 2)}) {
        auto elems = R->elements();
        CHECK(elems.size() == R->size());
        CHECK(elems[0].is_zero());
        for (std::uint64_t i = 0; i < R->size(); ++i) {
            CHECK(R->index_of(elems[i]) == i);
            if (i > 0) CHECK(elems[i - 1] < elems[i]);
        }
    }
}

TEST_CASE("text round trip") {
    for (const auto& R : {Ring::modular(12), Ring::poly_quotient(3, {0, 0, 0, 1}),
                          Ring::finite_field(2, 2), Ring::function_ring(2, 3),
                          Ring::truncated_multivar(3, 2, TruncationKind::total_degree, 2)}) {
        for (const auto& a : R->elements()) CHECK(R->parse(a.to_text()) == a);
    }
    auto laurent = Ring::laurent_rational();
    for (const char* lit : {"0", "1", "-1", "3/2", "x", "-x^-1 + 2", "1/3x^-2 + x + 2x^5"}) {
        RingElem a = laurent->parse(lit);
        CHECK(laurent->parse(a.to_text()) == a);
    }
}

TEST_CASE("finite fields") {
    auto f4 = Ring::finite_field(2, 2);
    CHECK(f4->size() == 4);
    CHECK(f4->is_integral_domain());
    // x plays the generator: x^2 = x + 1 under the canonical modulus
    CHECK(f4->parse("x") * f4->parse("x") == f4->parse("1 + x"));
    CHECK_THROWS_AS(Ring::finite_field(2, 2, {0, 0, 1}), PreconditionError); // x^2 reducible
}

TEST_CASE("quotient rings by explicit ideals") {
    auto z4 = Ring::modular(4);
    auto q = Ring::quotient_by_ideal(z4, cf_test::parse_set(z4, {"0", "2"}));
    CHECK(q->size() == 2);
    CHECK(q->is_integral_domain());
    CHECK(q->project(z4->parse("3")) == q->project(z4->parse("1")));
    CHECK(q->project(z4->parse("2")).is_zero());

    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    auto ann_x2 = annihilator(f3x3->parse("x^2"));
    auto q2 = Ring::quotient_by_ideal(f3x3, ann_x2);
    CHECK(q2->size() == 3);
    CHECK(q2->is_integral_domain());
    check_axioms_exhaustive(q2);

    CHECK_THROWS_AS(Ring::quotient_by_ideal(z4, cf_test::parse_set(z4, {"0", "1"})),
                    PreconditionError);
}

TEST_CASE("truncated multivariate rings") {
    auto A = Ring::truncated_multivar(3, 2, TruncationKind::total_degree, 2);
    CHECK(A->size() == 27); // basis {1, x1, x2}
    CHECK((A->parse("x1") * A->parse("x2")).is_zero());
    CHECK_FALSE(A->is_integral_domain());

    auto B = Ring::truncated_multivar(2, 2, TruncationKind::var_power, 2);
    CHECK(B->size() == 16); // basis {1, x1, x2, x1x2}
    CHECK((B->parse("x1") * B->parse("x1")).is_zero());
    CHECK(B->parse("x1") * B->parse("x2") == B->parse("x1x2"));
}

TEST_CASE("function rings are pointwise") {
    auto F = Ring::function_ring(3, 3);
    CHECK(F->parse("(1,2,0)") + F->parse("(2,2,1)") == F->parse("(0,1,1)"));
    CHECK(F->parse("(1,2,0)") * F->parse("(2,2,1)") == F->parse("(2,1,0)"));
    CHECK(F->parse("(1,2,1)").is_unit());
    CHECK_FALSE(F->parse("(1,0,1)").is_unit());
}

TEST_CASE("automorphisms act as expected") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    auto phi = RingAutomorphism::from_generator_images(f3x3, {f3x3->parse("2x")});
    CHECK(phi.apply(f3x3->parse("1 + x^2")) == f3x3->parse("1 + x^2"));
    CHECK(phi.apply(f3x3->parse("x")) == f3x3->parse("2x"));
    CHECK(phi.order() == 2);

    auto id = RingAutomorphism::identity(f3x3);
    for (const auto& a : f3x3->elements()) CHECK(id.apply(a) == a);

    auto f4 = Ring::finite_field(2, 2);
    auto frob = RingAutomorphism::frobenius(f4);
    CHECK(frob.apply(f4->parse("x")) == f4->parse("1 + x"));
    CHECK(frob.order() == 2);
    CHECK(frob.compose(frob).is_identity());
}

TEST_CASE("automorphism construction is validated") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    // (1 + x)^3 = 1 != 0, so x -> 1 + x breaks the quotient relation
    CHECK_THROWS_AS(RingAutomorphism::from_generator_images(f3x3, {f3x3->parse("1 + x")}),
                    PreconditionError);
    // x -> x^2 is not injective (kills x into a nilpotent of higher order)
    CHECK_THROWS_AS(RingAutomorphism::from_generator_images(f3x3, {f3x3->parse("x^2")}),
                    PreconditionError);

    CHECK_THROWS_AS(RingAutomorphism::laurent_scale(Rational(0)), PreconditionError);
}

TEST_CASE("automorphisms preserve the ring structure exhaustively") {
    auto f3x3 = Ring::poly_quotient(3, {0, 0, 0, 1});
    auto f4 = Ring::finite_field(2, 2);
    auto mv = Ring::truncated_multivar(3, 2, TruncationKind::total_degree, 2);
    struct Case { Ring::Ptr ring; RingAutomorphism phi; };
    std::vector<Case> cases{
        {f3x3, RingAutomorphism::from_generator_images(f3x3, {f3x3->parse("2x")})},
        {f4, RingAutomorphism::frobenius(f4)},
        {mv, RingAutomorphism::from_variable_permutation(mv, {1, 0})},
    };
    for (const auto& [R, phi] : cases) {
        CHECK(phi.apply(R->zero()).is_zero());
        CHECK(phi.apply(R->one()).is_one());
        for (const auto& a : R->elements())
            for (const auto& b : R->elements()) {
                CHECK(phi.apply(a + b) == phi.apply(a) + phi.apply(b));
                CHECK(phi.apply(a * b) == phi.apply(a) * phi.apply(b));
            }
    }
}

TEST_CASE("laurent automorphisms") {
    auto scale = RingAutomorphism::laurent_scale(Rational(2));
    auto L = scale.ring();
    CHECK(scale.apply(L->parse("x + x^-1")) == L->parse("2x + 1/2x^-1"));
    CHECK(scale.order() == 0); // 2 is not a root of unity
    CHECK(RingAutomorphism::laurent_scale(Rational(-1)).order() == 2);
    CHECK(scale.power(BigInt(3)).apply(L->parse("x")) == L->parse("8x"));
    CHECK(scale.inverse().apply(L->parse("x")) == L->parse("1/2x"));
}
