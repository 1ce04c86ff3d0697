#ifndef CROSSED_FORGE_CORRUPTED_SYSTEMS_HPP
#define CROSSED_FORGE_CORRUPTED_SYSTEMS_HPP

#include "crossed_forge/crossed_system.hpp"

#include <string>
#include <vector>

namespace cf_test {

using namespace crossed_forge;

struct CorruptedCase {
    std::string name;
    CrossedSystem::Ptr system;
    std::string expected_condition; // must appear among the violations
};

/// Deliberately broken quadruples, one per law.  Built unchecked, so the
/// validator is the only gatekeeper.
inline std::vector<CorruptedCase> corrupted_systems() {
    std::vector<CorruptedCase> out;

    { // a zero cocycle value
        Ring::Ptr A = Ring::modular(5);
        Group::Ptr G = Group::cyclic(2);
        std::vector<RingElem> alpha{A->one(), A->one(), A->one(), A->zero()};
        out.push_back({"alpha(1,1) = 0",
                       CrossedSystem::make_unchecked(A, G, {}, alpha), "alpha-unit"});
    }
    { // a non-unit (but nonzero) cocycle value
        Ring::Ptr A = Ring::modular(4);
        Group::Ptr G = Group::cyclic(2);
        std::vector<RingElem> alpha{A->one(), A->one(), A->one(), A->from_int(2)};
        out.push_back({"alpha(1,1) = 2 in Z/4",
                       CrossedSystem::make_unchecked(A, G, {}, alpha), "alpha-unit"});
    }
    { // alpha not normalized at the identity
        Ring::Ptr A = Ring::modular(5);
        Group::Ptr G = Group::cyclic(2);
        std::vector<RingElem> alpha{A->one(), A->from_int(2), A->one(), A->one()};
        out.push_back({"alpha(e,1) = 2",
                       CrossedSystem::make_unchecked(A, G, {}, alpha), "cocycle-normalization"});
    }
    { // sigma_e is not the identity
        Ring::Ptr A = Ring::poly_quotient(3, {0, 0, 0, 1});
        Group::Ptr G = Group::cyclic(2);
        RingAutomorphism twist = RingAutomorphism::from_generator_images(A, {A->parse("2x")});
        std::vector<RingAutomorphism> sigma{twist, RingAutomorphism::identity(A)};
        out.push_back({"sigma_e = (x -> 2x)",
                       CrossedSystem::make_unchecked(A, G, sigma, {}), "sigma-identity-at-e"});
    }
    { // sigma_1 . sigma_1 != sigma_2
        Ring::Ptr A = Ring::poly_quotient(3, {0, 0, 0, 1});
        Group::Ptr G = Group::cyclic(4);
        RingAutomorphism id = RingAutomorphism::identity(A);
        RingAutomorphism twist = RingAutomorphism::from_generator_images(A, {A->parse("2x")});
        std::vector<RingAutomorphism> sigma{id, twist, twist, twist};
        out.push_back({"sigma table is not compatible with the action law",
                       CrossedSystem::make_unchecked(A, G, sigma, {}), "action-compatibility"});
    }
    { // the cocycle identity fails
        Ring::Ptr A = Ring::modular(5);
        Group::Ptr G = Group::cyclic(3);
        std::vector<RingElem> alpha(9, A->one());
        alpha[1 * 3 + 1] = A->from_int(2); // alpha(1,1) = 2, everything else 1
        out.push_back({"alpha(1,1) = 2 alone breaks the cocycle identity",
                       CrossedSystem::make_unchecked(A, G, {}, alpha), "cocycle-identity"});
    }
    return out;
}

} // namespace cf_test

#endif
