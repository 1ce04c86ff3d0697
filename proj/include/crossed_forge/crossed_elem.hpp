#ifndef CROSSED_FORGE_CROSSED_ELEM_HPP
#define CROSSED_FORGE_CROSSED_ELEM_HPP

#include "crossed_forge/crossed_system.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace crossed_forge {

/// A finite-support formal sum over the group with ring coefficients.
/// Normalized: zero coefficients are never stored, so equality is plain
/// support+coefficient equality.
class CrossedElem {
public:
    using CoeffMap = std::map<GroupElem, RingElem>;

    CrossedElem() = default;
    explicit CrossedElem(CrossedSystem::Ptr sys) : sys_(std::move(sys)) {}
    static CrossedElem zero(CrossedSystem::Ptr sys) { return CrossedElem(std::move(sys)); }
    static CrossedElem single(CrossedSystem::Ptr sys, const GroupElem& g, const RingElem& coeff);
    /// The multiplicative identity 1*[e].
    static CrossedElem one(CrossedSystem::Ptr sys);

    const CrossedSystem::Ptr& system() const { return sys_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    RingElem coeff(const GroupElem& g) const; // 0 when absent
    std::vector<GroupElem> support() const;

    CrossedElem operator+(const CrossedElem& o) const;
    CrossedElem operator-(const CrossedElem& o) const;
    CrossedElem operator-() const;
    CrossedElem operator*(const CrossedElem& o) const;

    friend bool operator==(const CrossedElem& a, const CrossedElem& b);
    friend bool operator!=(const CrossedElem& a, const CrossedElem& b) { return !(a == b); }
    friend bool operator<(const CrossedElem& a, const CrossedElem& b);

    std::string to_text() const;

private:
    CrossedSystem::Ptr sys_;
    CoeffMap coeffs_;

    void set(const GroupElem& g, const RingElem& v); // drops zeros

    friend CrossedElem embed(const CrossedSystem::Ptr&, const RingElem&);
    friend CrossedElem translate_deform(const CrossedElem&, const GroupElem&);
    friend CrossedElem parse_crossed(const CrossedSystem::Ptr&, std::string_view);
};

/// a |-> a*[e], the canonical embedding of the base ring.
CrossedElem embed(const CrossedSystem::Ptr& sys, const RingElem& a);
/// True iff the support is contained in {e}.
bool is_in_base(const CrossedElem& u);

/// uv == vu, computed both as a direct product comparison and through the
/// per-degree coefficient condition; the two routes must agree.
bool commutes(const CrossedElem& u, const CrossedElem& v);
bool commutes_direct(const CrossedElem& u, const CrossedElem& v);
bool commutes_per_degree(const CrossedElem& u, const CrossedElem& v);

/// Right multiplication by 1*[g]: permutes the support by s -> sg and scales
/// each coefficient by the unit alpha(s, g); never shrinks the support.
CrossedElem translate_deform(const CrossedElem& u, const GroupElem& g);

/// Commutator with a*[e] over a commutative base: kills the identity-degree
/// coefficient, multiplies every other one by (a - sigma_s(a)).
CrossedElem kill(const CrossedElem& u, const RingElem& a);

std::string crossed_to_text(const CrossedElem& u);
/// Grammar: term ('+' term)*, term = coeff '*[' group ']'; multi-term or
/// signed coefficients are parenthesized, e.g. "(1 + 2x)*[1] + x^2*[0]".
CrossedElem parse_crossed(const CrossedSystem::Ptr& sys, std::string_view text);

} // namespace crossed_forge

#endif
