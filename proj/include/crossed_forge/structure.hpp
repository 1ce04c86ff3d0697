#ifndef CROSSED_FORGE_STRUCTURE_HPP
#define CROSSED_FORGE_STRUCTURE_HPP

#include "crossed_forge/crossed_elem.hpp"
#include "crossed_forge/finite_model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crossed_forge {

/// Per-degree coefficient sets R_s = {r | r sigma_s(a) = a r for all a}.
/// An element sum r_s [s] lies in the commutant of the embedded base ring
/// exactly when every coefficient lies in its degree's set.
struct CoefficientConstraintSet {
    CrossedSystem::Ptr system;

    // finite group: per_degree[i] = sorted R at group index i
    std::vector<std::vector<RingElem>> per_degree;

    // integers group:
    std::optional<BigInt> kernel_modulus;           // sigma kernel = mZ (0 means {0})
    std::vector<std::vector<RingElem>> per_residue; // finite ring: R per residue mod max(m,1)
    bool laurent_dichotomy = false;                 // R_s = A on the kernel, {0} off it

    bool contains(const GroupElem& s, const RingElem& r) const;
    bool trivial_at(const GroupElem& s) const; // R_s == {0}
    /// Minimal witness (s, r_s) with s != e and r_s != 0, if any.
    std::optional<std::pair<GroupElem, RingElem>> nontrivial_witness() const;
};

CoefficientConstraintSet commutant_constraints(const CrossedSystem::Ptr& sys);

/// Membership through the per-degree description, cross-checked against the
/// defining relation (commuting with every embedded a) when enumerable.
bool commutant_membership(const CrossedElem& u);

/// All elements of the commutant (finite systems, guarded).
std::vector<CrossedElem> enumerate_commutant(const CrossedSystem::Ptr& sys);

struct CenterDescription {
    // finite systems: the full element set, canonical order
    std::optional<std::vector<CrossedElem>> elements;
    // integers-group systems, symbolically:
    std::optional<BigInt> support_modulus;                  // support must lie in mZ
    std::vector<std::vector<RingElem>> per_residue_coeffs;  // finite ring: allowed coefficients
    std::optional<std::int64_t> fixed_exponent_modulus;     // Laurent: coefficients in span{x^(d k)}
    std::string text;
};

/// Center via the per-degree characterization; for finite systems within the
/// product-space guard the result is cross-checked element-for-element
/// against definition-level brute force.
CenterDescription center_compute(const CrossedSystem::Ptr& sys);
bool center_membership(const CrossedElem& u);

struct CommutativityVerdict {
    bool value = false;
    std::string violated_condition; // "base-ring-commutative", "action-trivial",
                                    // "group-abelian", "cocycle-symmetric"
    std::string witness;
};
CommutativityVerdict is_commutative(const CrossedSystem::Ptr& sys);

struct MaximalityVerdict {
    bool value = false;
    std::optional<GroupElem> witness_degree;      // s != e with R_s != {0}
    std::optional<RingElem> witness_coefficient;  // minimal nonzero r_s
    bool via_domain_fast_path = false;
};
/// Is the embedded base ring maximal commutative?  Integral domains go
/// through the kernel-triviality criterion; finite rings through the
/// per-degree sets.  Defined over commutative bases only.
MaximalityVerdict is_maximal_commutative(const CrossedSystem::Ptr& sys);

struct CommutantCommutativityVerdict {
    bool value = false;
    bool by_hypotheses = false; // commutative base + abelian group + symmetric cocycle
    std::optional<std::pair<CrossedElem, CrossedElem>> witness;
};
CommutantCommutativityVerdict commutant_is_commutative(const CrossedSystem::Ptr& sys);

/// Brute-force pairwise commutativity of the whole crossed product.
bool all_pairs_commute(const FiniteModel& model,
                       std::pair<std::uint64_t, std::uint64_t>* witness = nullptr);

struct StructureReport {
    std::optional<CenterDescription> center;
    std::optional<CoefficientConstraintSet> commutant;
    CommutativityVerdict commutative;
    std::optional<MaximalityVerdict> maximal;
    std::optional<CommutantCommutativityVerdict> commutant_commutative;
};
/// Runs every analysis the guards allow; pieces that hit a guard stay empty.
StructureReport analyze_structure(const CrossedSystem::Ptr& sys);

} // namespace crossed_forge

#endif
