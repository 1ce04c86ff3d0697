#ifndef CROSSED_FORGE_TEST_HELPERS_HPP
#define CROSSED_FORGE_TEST_HELPERS_HPP

#include "crossed_forge/crossed_elem.hpp"
#include "crossed_forge/crossed_system.hpp"

#include <random>
#include <string>
#include <vector>

namespace cf_test {

using namespace crossed_forge;

/// F_3[x]/(x^3) x| C2 with x -> 2x: the small truncated-torus model used all
/// over the suite.
inline CrossedSystem::Ptr f3_torus() {
    Ring::Ptr A = Ring::poly_quotient(3, {0, 0, 0, 1});
    RingAutomorphism scale = RingAutomorphism::from_generator_images(A, {A->parse("2x")});
    return CrossedSystem::cyclic_action(A, Group::cyclic(2), scale);
}

inline CrossedSystem::Ptr z4_c2_group_ring() {
    return CrossedSystem::group_ring(Ring::modular(4), Group::cyclic(2));
}

inline CrossedSystem::Ptr f4_frobenius() {
    Ring::Ptr F = Ring::finite_field(2, 2);
    return CrossedSystem::cyclic_action(F, Group::cyclic(2), RingAutomorphism::frobenius(F));
}

inline CrossedSystem::Ptr z3_s3_group_ring() {
    return CrossedSystem::group_ring(Ring::modular(3), Group::symmetric(3));
}

inline CrossedSystem::Ptr twisted_z5_c2() {
    Ring::Ptr A = Ring::modular(5);
    std::vector<RingElem> alpha{A->one(), A->one(), A->one(), A->from_int(2)};
    return CrossedSystem::twisted_group_ring(A, Group::cyclic(2), alpha);
}

inline CrossedSystem::Ptr rational_torus(const Rational& q) {
    return CrossedSystem::cyclic_action(Ring::laurent_rational(), Group::integers(),
                                        RingAutomorphism::laurent_scale(q));
}

inline RingElem random_ring_elem(const Ring::Ptr& ring, std::mt19937_64& rng) {
    return ring->element_at(rng() % ring->size());
}

inline CrossedElem random_elem(const CrossedSystem::Ptr& sys, std::mt19937_64& rng) {
    CrossedElem out(sys);
    std::uint64_t n = sys->group()->order();
    for (std::uint64_t g = 0; g < n; ++g) {
        RingElem c = sys->ring()->element_at(rng() % sys->ring()->size());
        if (!c.is_zero()) out = out + CrossedElem::single(sys, sys->group()->at(g), c);
    }
    return out;
}

/// Parses a set literal list into sorted ring elements.
inline std::vector<RingElem> parse_set(const Ring::Ptr& ring, std::vector<std::string> lits) {
    std::vector<RingElem> out;
    for (const auto& t : lits) out.push_back(ring->parse(t));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cf_test

#endif
