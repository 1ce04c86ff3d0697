#ifndef CROSSED_FORGE_CROSSED_SYSTEM_HPP
#define CROSSED_FORGE_CROSSED_SYSTEM_HPP

#include "crossed_forge/group.hpp"
#include "crossed_forge/ring.hpp"
#include "crossed_forge/ring_automorphism.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crossed_forge {

struct ValidationIssue {
    std::string condition; // "alpha-unit", "action-compatibility", "cocycle-identity",
                           // "cocycle-normalization", "sigma-identity-at-e"
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    std::string summary() const;
};

/// The quadruple {A, G, sigma, alpha}.  Finite groups carry full sigma/alpha
/// tables; the integers group carries the generator automorphism sigma_1 and
/// only supports the trivial cocycle.  Builders validate eagerly, so
/// downstream code may assume the cocycle laws hold; unchecked construction
/// exists for the validator's own test corpus and for scenario files, whose
/// systems are validated as an explicit check.
class CrossedSystem : public std::enable_shared_from_this<CrossedSystem> {
public:
    using Ptr = std::shared_ptr<const CrossedSystem>;

    // builders (validated)
    static Ptr group_ring(Ring::Ptr ring, Group::Ptr group);
    static Ptr twisted_group_ring(Ring::Ptr ring, Group::Ptr group, std::vector<RingElem> alpha);
    static Ptr action_only(Ring::Ptr ring, Group::Ptr group, std::vector<RingAutomorphism> sigma);
    static Ptr full(Ring::Ptr ring, Group::Ptr group, std::vector<RingAutomorphism> sigma,
                    std::vector<RingElem> alpha);
    /// Cyclic or integers group acted on through powers of one automorphism.
    static Ptr cyclic_action(Ring::Ptr ring, Group::Ptr group, const RingAutomorphism& generator);
    /// No validation; verify_crossed_system reports the violations.
    static Ptr make_unchecked(Ring::Ptr ring, Group::Ptr group,
                              std::vector<RingAutomorphism> sigma, std::vector<RingElem> alpha);

    const Ring::Ptr& ring() const { return ring_; }
    const Group::Ptr& group() const { return group_; }
    bool validated() const { return validated_; }

    /// sigma_g; for the integers group this is sigma_1^g.
    RingAutomorphism sigma(const GroupElem& g) const;
    /// For the integers group: the stored sigma_1.  For cyclic groups: the
    /// image of the generator 1.
    const RingAutomorphism& sigma_generator() const;
    /// alpha(s, t); 1 everywhere for the trivial cocycle.
    RingElem alpha(const GroupElem& s, const GroupElem& t) const;

    bool alpha_is_trivial() const { return alpha_trivial_; }
    bool sigma_is_trivial() const;
    bool alpha_is_symmetric() const;
    /// |A|^|G|, the number of crossed-product elements (finite systems).
    std::uint64_t product_size() const;

    std::string describe() const;

    /// Requires a validated system; used by every structural operation.
    void require_validated(const char* op) const;

private:
    CrossedSystem() = default;

    Ring::Ptr ring_;
    Group::Ptr group_;
    std::vector<RingAutomorphism> sigma_; // per group index, or {sigma_1} for Z
    std::vector<RingElem> alpha_;         // row-major |G| x |G|, empty when trivial
    bool alpha_trivial_ = true;
    bool validated_ = false;

    friend ValidationReport verify_crossed_system(const CrossedSystem& sys);
    friend class ValidationAccess;
};

class ValidationError : public Error {
public:
    ValidationError(std::string what, ValidationReport report)
        : Error(what + ": " + report.summary()), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Exhaustively checks the cocycle laws, the unit condition on alpha and
/// sigma_e = id; returns the violations with witnesses (at most 10 per
/// condition).  Integers-group systems are valid by construction shape.
ValidationReport verify_crossed_system(const CrossedSystem& sys);

/// {a in A | sigma_s(a) = a for all s}.  Finite rings only.
std::vector<RingElem> fixed_ring(const CrossedSystem::Ptr& sys);

/// The kernel {g | sigma_g = id}.  Finite groups get the element list;
/// the integers get the modulus m with kernel = mZ (m = 0 means {0}).
struct SigmaKernel {
    std::vector<GroupElem> elements;  // finite case, sorted
    std::optional<BigInt> modulus;    // integers case
    bool is_trivial(const CrossedSystem& sys) const;
    bool contains(const GroupElem& g) const;
};
SigmaKernel sigma_kernel(const CrossedSystem::Ptr& sys);

} // namespace crossed_forge

#endif
