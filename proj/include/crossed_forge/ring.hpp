#ifndef CROSSED_FORGE_RING_HPP
#define CROSSED_FORGE_RING_HPP

#include "crossed_forge/errors.hpp"
#include "crossed_forge/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace crossed_forge {

class RingElem;

enum class RingKind {
    modular,           // Z/n
    poly_quotient,     // F_p[x]/(f), f monic (possibly reducible)
    finite_field,      // F_p[x]/(f), f irreducible
    laurent_rational,  // Q[x, x^-1]
    truncated_multivar,// F_p[x_1..x_n] / monomial truncation ideal
    function_ring,     // functions {0..n-1} -> F_p with pointwise operations
    quotient_ring,     // finite parent ring / explicit ideal
};

enum class TruncationKind {
    total_degree, // kill monomials of total degree >= bound
    var_power,    // kill x_i^bound for every i
};

/// An exact coefficient ring from the fixed catalog.  Immutable; elements
/// carry a shared_ptr to their ring.  The finite kinds enumerate their
/// elements in a fixed canonical order (index 0 is always 0, the ring zero).
class Ring : public std::enable_shared_from_this<Ring> {
public:
    using Ptr = std::shared_ptr<const Ring>;
    using LaurentPoly = std::map<std::int64_t, Rational>; // exponent -> coeff, no zeros

    static Ptr modular(std::int64_t n);
    /// Coefficients ascending; the vector is the full monic modulus
    /// including the leading 1, e.g. x^3 over F_3 is {0,0,0,1}.
    static Ptr poly_quotient(std::int64_t p, std::vector<std::int64_t> modulus);
    static Ptr finite_field(std::int64_t p, int degree);
    static Ptr finite_field(std::int64_t p, int degree, std::vector<std::int64_t> modulus);
    static Ptr laurent_rational();
    static Ptr truncated_multivar(std::int64_t p, int nvars, TruncationKind trunc, int bound);
    static Ptr function_ring(std::int64_t p, int npoints);
    /// Quotient of a finite ring by an explicitly enumerated ideal
    /// (verified: additive subgroup, absorbs multiplication).
    static Ptr quotient_by_ideal(Ptr parent, const std::vector<RingElem>& ideal_elems);

    RingKind kind() const { return kind_; }
    bool is_finite() const { return kind_ != RingKind::laurent_rational; }
    std::uint64_t size() const; // throws UnsupportedError for the Laurent ring
    bool is_commutative() const { return true; } // the whole catalog is commutative
    bool is_integral_domain() const { return integral_domain_; }
    std::string describe() const;

    bool same_as(const Ring& other) const; // structural descriptor equality

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(std::int64_t v) const; // canonical image of an integer

    // Canonical enumeration (finite kinds only).
    std::uint64_t index_of(const RingElem& a) const;
    RingElem element_at(std::uint64_t index) const;
    std::vector<RingElem> elements() const; // guarded

    /// A set generating (A,+): 1 for Z/n, the monomial basis for the
    /// polynomial kinds, the indicator functions for function rings.
    std::vector<RingElem> additive_generators() const;
    /// Generators an automorphism must provide images for (empty for Z/n).
    std::vector<RingElem> ring_generators() const;

    std::string to_text(const RingElem& a) const;
    RingElem parse(std::string_view text) const;

    // --- kind-specific accessors -------------------------------------
    std::int64_t modulus_n() const;                       // modular
    std::int64_t characteristic_p() const;                // polynomial / function kinds
    const std::vector<std::int64_t>& poly_modulus() const;// poly_quotient / finite_field
    int poly_degree() const;                              // dito
    int nvars() const;                                    // truncated_multivar
    TruncationKind truncation() const;                    // truncated_multivar
    int truncation_bound() const;                         // truncated_multivar
    const std::vector<std::vector<int>>& monomial_basis() const; // truncated_multivar
    int npoints() const;                                  // function_ring
    Ptr parent() const;                                   // quotient_ring
    const std::vector<std::uint64_t>& coset_reps() const; // quotient_ring, parent indices
    RingElem project(const RingElem& parent_elem) const;  // quotient_ring: theta
    RingElem lift(const RingElem& quotient_elem) const;   // quotient_ring: rep in parent

    // Element arithmetic (dispatched here so payloads stay private-ish).
    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    bool is_unit(const RingElem& a) const;
    std::optional<RingElem> inverse(const RingElem& a) const;

private:
    Ring() = default;

    RingKind kind_ = RingKind::modular;
    bool integral_domain_ = false;

    std::int64_t n_ = 0;                      // modular
    std::int64_t p_ = 0;                      // polynomial / function kinds
    std::vector<std::int64_t> modulus_;       // poly kinds, ascending incl. leading 1
    int nvars_ = 0;                           // truncated_multivar
    TruncationKind trunc_ = TruncationKind::total_degree;
    int bound_ = 0;
    std::vector<std::vector<int>> basis_;     // truncated_multivar monomials
    std::map<std::vector<int>, int> basis_index_;
    std::vector<std::vector<int>> prod_table_;// truncated_multivar: basis x basis -> basis index or -1
    int npoints_ = 0;                         // function_ring
    Ptr parent_;                              // quotient_ring
    std::vector<std::uint64_t> reps_;         // quotient_ring: sorted parent indices
    std::vector<std::uint64_t> canon_;        // quotient_ring: parent index -> canonical rep index

    friend class RingElem;
};

/// A ring element in canonical reduced form.  Value type; equality is
/// structural equality of canonical payloads (owners must agree).
class RingElem {
public:
    using Payload = std::variant<std::int64_t, std::vector<std::int64_t>, Ring::LaurentPoly>;

    RingElem() = default;
    RingElem(Ring::Ptr owner, Payload payload);

    const Ring& ring() const { return *owner_; }
    Ring::Ptr ring_ptr() const { return owner_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const { return owner_->is_unit(*this); }
    std::optional<RingElem> inverse() const { return owner_->inverse(*this); }
    std::string to_text() const { return owner_->to_text(*this); }
    std::uint64_t index() const { return owner_->index_of(*this); }

    friend RingElem operator+(const RingElem& a, const RingElem& b) { return a.owner_->add(a, b); }
    friend RingElem operator-(const RingElem& a, const RingElem& b) { return a.owner_->sub(a, b); }
    friend RingElem operator*(const RingElem& a, const RingElem& b) { return a.owner_->mul(a, b); }
    RingElem operator-() const { return owner_->neg(*this); }

    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
    friend bool operator<(const RingElem& a, const RingElem& b); // canonical total order

private:
    Ring::Ptr owner_;
    Payload payload_;

    friend class Ring;
};

/// {c in A | a*c = 0}, by exhaustive enumeration over a finite ring.
std::vector<RingElem> annihilator(const RingElem& a);

/// The set D of zero-divisors of a finite ring, 0 included.
std::vector<RingElem> zero_divisor_set(const Ring::Ptr& ring);

void require_same_ring(const RingElem& a, const RingElem& b, const char* op);

} // namespace crossed_forge

#endif
