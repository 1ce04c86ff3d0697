#include "crossed_forge/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace crossed_forge;

TEST_CASE("cyclic groups") {
    auto c6 = Group::cyclic(6);
    CHECK(c6->order() == 6);
    CHECK(c6->op(c6->parse("4"), c6->parse("5")) == c6->parse("3"));
    CHECK(c6->inverse(c6->parse("2")) == c6->parse("4"));
    CHECK(c6->identity().is_identity());
}

TEST_CASE("symmetric groups use lexicographic one-line order") {
    auto s3 = Group::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->at(0).is_identity());
    CHECK(s3->to_text(s3->at(0)) == "123");
    // composition convention: (p*q)(i) = p(q(i))
    GroupElem swap12 = s3->parse("213");
    GroupElem cycle = s3->parse("231"); // 1->2, 2->3, 3->1
    CHECK(s3->to_text(swap12 * cycle) == "132");
    CHECK(s3->to_text(cycle * swap12) == "321");
    CHECK((cycle * cycle * cycle).is_identity());
}

TEST_CASE("direct products") {
    auto g = Group::direct_product({Group::cyclic(2), Group::cyclic(3)});
    CHECK(g->order() == 6);
    CHECK(g->is_abelian());
    GroupElem a = g->parse("(1,2)");
    CHECK(g->to_text(a * a) == "(0,1)");
    CHECK((a * g->inverse(a)).is_identity());
}

TEST_CASE("group center by brute force") {
    auto s3 = Group::symmetric(3);
    auto center = group_center(s3);
    REQUIRE(center.size() == 1);
    CHECK(center[0].is_identity());

    auto c4 = Group::cyclic(4);
    CHECK(group_center(c4).size() == 4);
}

TEST_CASE("cyclic subgroups") {
    auto s3 = Group::symmetric(3);
    CHECK(cyclic_subgroup(s3->parse("231")).size() == 3);
    CHECK(cyclic_subgroup(s3->parse("213")).size() == 2);

    auto z = Group::integers();
    CHECK(cyclic_subgroup(z->identity()).size() == 1);
    CHECK_THROWS_AS(cyclic_subgroup(GroupElem(z, BigInt(1))), UnsupportedError);
}

TEST_CASE("normality") {
    auto s3 = Group::symmetric(3);
    std::vector<GroupElem> not_normal{s3->parse("123"), s3->parse("213")};
    CHECK_FALSE(is_normal_subgroup(s3, not_normal));

    std::vector<GroupElem> a3{s3->parse("123"), s3->parse("231"), s3->parse("312")};
    CHECK(is_normal_subgroup(s3, a3));

    std::vector<GroupElem> not_subgroup{s3->parse("123"), s3->parse("231")};
    CHECK_THROWS_AS(is_normal_subgroup(s3, not_subgroup), PreconditionError);

    CHECK_THROWS_AS(Group::quotient(s3, not_normal), PreconditionError);
}

TEST_CASE("quotient groups") {
    auto c6 = Group::cyclic(6);
    std::vector<GroupElem> n{c6->parse("0"), c6->parse("2"), c6->parse("4")};
    auto q = Group::quotient(c6, n);
    CHECK(q->order() == 2);
    CHECK(q->at(0).is_identity());
    // the quotient multiplies like C2
    CHECK(q->op(q->at(1), q->at(1)) == q->at(0));
    CHECK(q->to_text(q->at(1)) == "1"); // minimal coset representative

    // well-definedness: the product does not depend on the representatives
    for (const auto& r1 : {c6->parse("1"), c6->parse("3"), c6->parse("5")})
        for (const auto& r2 : {c6->parse("1"), c6->parse("3"), c6->parse("5")})
            CHECK(q->coset_of(c6->op(r1, r2)) == q->at(0));

    // S3 / A3 has order 2
    auto s3 = Group::symmetric(3);
    std::vector<GroupElem> a3{s3->parse("123"), s3->parse("231"), s3->parse("312")};
    auto q2 = Group::quotient(s3, a3);
    CHECK(q2->order() == 2);
    CHECK(q2->op(q2->at(1), q2->at(1)) == q2->at(0));
}

TEST_CASE("quotients of the integers") {
    auto z = Group::integers();
    auto q = quotient_group_integers(z, BigInt(6));
    CHECK(q->kind() == GroupKind::cyclic);
    CHECK(q->order() == 6);
    CHECK_THROWS_AS(quotient_group_integers(z, BigInt(0)), PreconditionError);
}

TEST_CASE("integers group arithmetic is arbitrary precision") {
    auto z = Group::integers();
    GroupElem big = z->parse("123456789012345678901234567890");
    CHECK((big * z->inverse(big)).is_identity());
    CHECK(z->to_text(big * big) == "246913578024691357802469135780");
    CHECK_THROWS_AS(z->elements(), UnsupportedError);
    CHECK_THROWS_AS(z->order(), UnsupportedError);
}

TEST_CASE("group element text round trip") {
    for (const auto& g : {Group::cyclic(5), Group::symmetric(3),
                          Group::direct_product({Group::cyclic(2), Group::symmetric(3)})}) {
        for (const auto& e : g->elements()) CHECK(g->parse(g->to_text(e)) == e);
    }
}

TEST_CASE("enumeration guard on big groups") {
    auto big = Group::direct_product({Group::cyclic(30), Group::cyclic(30)});
    CHECK_THROWS_AS(group_center(big), EnumerationLimitError);
}
