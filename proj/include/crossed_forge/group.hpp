#ifndef CROSSED_FORGE_GROUP_HPP
#define CROSSED_FORGE_GROUP_HPP

#include "crossed_forge/errors.hpp"
#include "crossed_forge/numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace crossed_forge {

class GroupElem;

enum class GroupKind { cyclic, symmetric, direct_product, quotient, integers };

/// A group from the fixed catalog.  Finite kinds enumerate their elements in
/// a fixed canonical order with the identity at index 0; the integers kind
/// supports arithmetic on arbitrary-precision elements but no enumeration.
class Group : public std::enable_shared_from_this<Group> {
public:
    using Ptr = std::shared_ptr<const Group>;

    static Ptr cyclic(std::int64_t k);
    static Ptr symmetric(int n); // n <= 8
    static Ptr direct_product(std::vector<Ptr> factors);
    /// Quotient by a normal subgroup given as an explicit element set;
    /// normality is verified.  Elements are cosets, represented by their
    /// minimal member in the parent's canonical order.
    static Ptr quotient(Ptr parent, const std::vector<GroupElem>& normal_subgroup);
    static Ptr integers();

    GroupKind kind() const { return kind_; }
    bool is_finite() const { return kind_ != GroupKind::integers; }
    std::uint64_t order() const; // throws for the integers
    bool is_abelian() const;
    bool same_as(const Group& other) const;
    std::string describe() const;

    GroupElem identity() const;
    GroupElem at(std::uint64_t index) const;
    std::uint64_t index_of(const GroupElem& g) const;
    std::vector<GroupElem> elements() const; // guarded

    GroupElem op(const GroupElem& a, const GroupElem& b) const;
    GroupElem inverse(const GroupElem& a) const;

    std::string to_text(const GroupElem& g) const;
    GroupElem parse(std::string_view text) const;

    // kind accessors
    std::int64_t cyclic_order() const { return k_; }
    int symmetric_n() const { return n_; }
    /// Symmetric kind: the one-line form (0-based images) of an element.
    const std::vector<int>& one_line(const GroupElem& g) const;
    const std::vector<Ptr>& factors() const { return factors_; }
    Ptr parent() const { return parent_; }
    const std::vector<std::uint64_t>& subgroup_indices() const { return subgroup_; }
    GroupElem coset_rep(const GroupElem& coset) const;   // quotient: canonical parent element
    GroupElem coset_of(const GroupElem& parent_elem) const; // quotient: project

private:
    Group() = default;

    GroupKind kind_ = GroupKind::cyclic;
    std::int64_t k_ = 0;                        // cyclic
    int n_ = 0;                                 // symmetric
    std::vector<std::vector<int>> perms_;       // symmetric, lex-sorted one-line forms
    std::vector<Ptr> factors_;                  // direct_product
    Ptr parent_;                                // quotient
    std::vector<std::uint64_t> subgroup_;       // quotient: sorted parent indices of N
    std::vector<std::uint64_t> coset_rep_;      // quotient: coset index -> parent rep index
    std::vector<std::uint64_t> coset_of_;       // quotient: parent index -> coset index
};

/// Group element; payload is the canonical index for finite kinds and an
/// arbitrary-precision integer for the integers kind.
class GroupElem {
public:
    using Payload = std::variant<std::uint64_t, BigInt>;

    GroupElem() = default;
    GroupElem(Group::Ptr owner, Payload payload)
        : owner_(std::move(owner)), payload_(std::move(payload)) {}

    const Group& group() const { return *owner_; }
    Group::Ptr group_ptr() const { return owner_; }
    const Payload& payload() const { return payload_; }

    std::uint64_t index() const { return std::get<std::uint64_t>(payload_); }
    const BigInt& integer() const { return std::get<BigInt>(payload_); }
    bool is_identity() const;

    GroupElem operator*(const GroupElem& o) const { return owner_->op(*this, o); }
    GroupElem inv() const { return owner_->inverse(*this); }
    std::string to_text() const { return owner_->to_text(*this); }

    friend bool operator==(const GroupElem& a, const GroupElem& b);
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
    friend bool operator<(const GroupElem& a, const GroupElem& b);

private:
    Group::Ptr owner_;
    Payload payload_;
};

void require_same_group(const GroupElem& a, const GroupElem& b, const char* op);

/// Brute-force center {z : zg = gz for all g}.  Guarded; finite kinds only.
std::vector<GroupElem> group_center(const Group::Ptr& g);

/// The cyclic subgroup generated by one element.  For the integers kind this
/// is only defined for g = 0 (anything else generates an infinite set).
std::vector<GroupElem> cyclic_subgroup(const GroupElem& g);

/// True iff `subset` is a normal subgroup; throws if it is not a subgroup.
bool is_normal_subgroup(const Group::Ptr& g, const std::vector<GroupElem>& subset);

/// Same as Group::quotient; named to match the operation vocabulary.
Group::Ptr quotient_group(const Group::Ptr& g, const std::vector<GroupElem>& normal_subgroup);
/// Integers modulo m (the only quotients of the integers kind).
Group::Ptr quotient_group_integers(const Group::Ptr& g, const BigInt& modulus);

} // namespace crossed_forge

#endif
