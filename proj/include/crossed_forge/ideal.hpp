#ifndef CROSSED_FORGE_IDEAL_HPP
#define CROSSED_FORGE_IDEAL_HPP

#include "crossed_forge/finite_model.hpp"
#include "crossed_forge/structure.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crossed_forge {

class IdealSet;
struct LiftedIdeal;
LiftedIdeal lift_ideal(const CrossedSystem::Ptr& sys, const std::vector<RingElem>& base_ideal);

/// An explicitly enumerated two-sided ideal of a finite crossed product.
/// Elements are stored as model codes (sorted) and materialized on demand.
class IdealSet {
public:
    IdealSet() = default;

    const CrossedSystem::Ptr& system() const { return sys_; }
    const FiniteModel& model() const { return *model_; }
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    const std::vector<CrossedElem>& generators() const { return generators_; }

    std::size_t size() const { return codes_.size(); }
    bool is_zero_ideal() const { return codes_.size() == 1; }
    bool contains_code(std::uint64_t code) const;
    bool contains(const CrossedElem& u) const;
    CrossedElem element(std::size_t i) const; // i-th member in code order
    std::vector<CrossedElem> elements(std::size_t cap = 0) const; // cap 0 = all

private:
    CrossedSystem::Ptr sys_;
    std::shared_ptr<const FiniteModel> model_;
    std::vector<std::uint64_t> codes_;
    std::vector<CrossedElem> generators_;

    friend IdealSet ideal_closure(const CrossedSystem::Ptr&, const std::vector<CrossedElem>&);
    friend LiftedIdeal lift_ideal(const CrossedSystem::Ptr&, const std::vector<RingElem>&);
};

/// Least set containing the generators that is closed under +, - and
/// two-sided multiplication by single-term elements (hence by everything).
/// Worklist fixpoint with the additive span maintained as a subgroup.
IdealSet ideal_closure(const CrossedSystem::Ptr& sys, const std::vector<CrossedElem>& generators);

/// {a in A | a*[e] lies in I}; always contains 0.
std::vector<RingElem> intersect_base(const IdealSet& I);

struct CommutantIntersection {
    std::vector<std::uint64_t> codes;    // members of I that commute with the base
    std::optional<CrossedElem> witness;  // nonzero witness from the proof-replay procedure
    int replay_rounds = 0;               // kill steps used to reach it
};
/// I intersected with the commutant of the embedded base; for nonzero I the
/// witness is produced by alternating translate_deform / kill inside I.
CommutantIntersection intersect_commutant(const IdealSet& I);

/// J = { sums with every coefficient in I } for a verified ideal I of A,
/// built by lift_ideal.  Right closure always holds; two_sided records the
/// verified left closure (guaranteed when I sits inside the fixed ring).
struct LiftedIdeal {
    IdealSet ideal;
    bool two_sided = false;
    bool base_in_fixed_ring = false;
};

/// A verified coefficient/group-map pair Gamma between two crossed products:
/// either descent along a group quotient G -> G/N or along a coefficient
/// quotient A -> A/ann(c).
class DescentHomomorphism {
public:
    const CrossedSystem::Ptr& source() const { return src_; }
    const CrossedSystem::Ptr& target() const { return tgt_; }
    RingElem map_coeff(const RingElem& a) const { return theta_(a); }
    GroupElem map_group(const GroupElem& g) const { return phi_(g); }
    CrossedElem apply(const CrossedElem& u) const;
    bool base_injective() const { return base_injective_; }
    const std::string& verification_note() const { return note_; }

private:
    CrossedSystem::Ptr src_, tgt_;
    std::function<RingElem(const RingElem&)> theta_;
    std::function<GroupElem(const GroupElem&)> phi_;
    bool base_injective_ = false;
    std::string note_;

    friend DescentHomomorphism make_descent(CrossedSystem::Ptr, CrossedSystem::Ptr,
                                            std::function<RingElem(const RingElem&)>,
                                            std::function<GroupElem(const GroupElem&)>,
                                            const char*);
};

/// Descends along G -> G/N.  Hypotheses (verified, with named failures):
/// sigma is a group homomorphism, N is normal and acts trivially, alpha is 1
/// on N-pairs and constant on coset pairs (so the quotient cocycle exists).
DescentHomomorphism quotient_descend(const CrossedSystem::Ptr& sys,
                                     const std::vector<GroupElem>& N);

struct ObstructionResult {
    DescentHomomorphism gamma;
    IdealSet ideal;                  // generated by d*[g]
    bool empty_regular_intersection; // I misses every non-zero-divisor of the base
    std::size_t annihilator_size;
};
/// The zero-divisor construction: c a nonzero zero-divisor fixed by the
/// action, d != 0 with c*d = 0, g != e.  Builds A/ann(c), the descended
/// system and Gamma, then scans the ideal generated by d*[g].
ObstructionResult zero_divisor_obstruction(const CrossedSystem::Ptr& sys, const RingElem& c,
                                           const RingElem& d, const GroupElem& g);

enum class TheoremStatus { PASS, FAIL, SKIPPED };

struct TheoremOutcome {
    std::string id;
    TheoremStatus status = TheoremStatus::SKIPPED;
    std::string detail;
};

struct TheoremReport {
    CrossedSystem::Ptr system;
    std::vector<TheoremOutcome> entries;
    bool all_applicable_pass() const;
};

/// Tests every intersection statement whose hypotheses hold on this system,
/// enumerating single-generator ideals in canonical order (capped at 10^4).
/// Hypothesis failures come back as SKIPPED entries, never silent passes.
TheoremReport run_theorem_suite(const CrossedSystem::Ptr& sys);

} // namespace crossed_forge

#endif
