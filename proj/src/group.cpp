#include "crossed_forge/group.hpp"

#include "crossed_forge/guards.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>

namespace crossed_forge {

// ---------------------------------------------------------------- factories

Group::Ptr Group::cyclic(std::int64_t k) {
    if (k < 1) throw PreconditionError("cyclic group order must be >= 1");
    if (k >= (1LL << 31)) throw PreconditionError("cyclic group order too large");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::cyclic;
    g->k_ = k;
    return g;
}

Group::Ptr Group::symmetric(int n) {
    if (n < 1 || n > 8) throw PreconditionError("symmetric group degree out of range [1,8]");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::symmetric;
    g->n_ = n;
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 0);
    do {
        g->perms_.push_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return g;
}

Group::Ptr Group::direct_product(std::vector<Ptr> factors) {
    if (factors.empty()) throw PreconditionError("direct product needs at least one factor");
    std::uint64_t total = 1;
    for (const auto& f : factors) {
        if (!f->is_finite()) throw UnsupportedError("direct products of the integers are not supported");
        if (total > (1ULL << 40) / f->order())
            throw PreconditionError("direct product order too large");
        total *= f->order();
    }
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::direct_product;
    g->factors_ = std::move(factors);
    return g;
}

Group::Ptr Group::quotient(Ptr parent, const std::vector<GroupElem>& normal_subgroup) {
    if (!parent || !parent->is_finite())
        throw UnsupportedError("quotients need a finite parent (use quotient_group_integers for Z)");
    if (!is_normal_subgroup(parent, normal_subgroup))
        throw PreconditionError("quotient: the given subgroup is not normal");

    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::quotient;
    g->parent_ = parent;
    for (const auto& e : normal_subgroup) g->subgroup_.push_back(parent->index_of(e));
    std::sort(g->subgroup_.begin(), g->subgroup_.end());

    std::uint64_t n = parent->order();
    g->coset_of_.assign(n, n);
    for (std::uint64_t a = 0; a < n; ++a) {
        if (g->coset_of_[a] != n) continue;
        // ascending scan: the first unassigned element is the coset minimum
        std::uint64_t coset_idx = g->coset_rep_.size();
        GroupElem ea = parent->at(a);
        for (auto s : g->subgroup_) {
            std::uint64_t member = parent->index_of(parent->op(ea, parent->at(s)));
            g->coset_of_[member] = coset_idx;
        }
        g->coset_rep_.push_back(a);
    }
    assert(g->coset_rep_.size() * g->subgroup_.size() == n);
    return g;
}

Group::Ptr Group::integers() {
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::integers;
    return g;
}

// ------------------------------------------------------------------ basics

std::uint64_t Group::order() const {
    switch (kind_) {
    case GroupKind::cyclic: return static_cast<std::uint64_t>(k_);
    case GroupKind::symmetric: return perms_.size();
    case GroupKind::direct_product: {
        std::uint64_t total = 1;
        for (const auto& f : factors_) total *= f->order();
        return total;
    }
    case GroupKind::quotient: return coset_rep_.size();
    case GroupKind::integers: throw UnsupportedError("the integers group is infinite");
    }
    throw Error("unreachable");
}

bool Group::is_abelian() const {
    switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::integers: return true;
    case GroupKind::symmetric: return n_ <= 2;
    case GroupKind::direct_product:
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Ptr& f) { return f->is_abelian(); });
    case GroupKind::quotient: {
        for (std::uint64_t i = 0; i < order(); ++i)
            for (std::uint64_t j = i + 1; j < order(); ++j)
                if (!(op(at(i), at(j)) == op(at(j), at(i)))) return false;
        return true;
    }
    }
    throw Error("unreachable");
}

bool Group::same_as(const Group& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case GroupKind::cyclic: return k_ == o.k_;
    case GroupKind::symmetric: return n_ == o.n_;
    case GroupKind::integers: return true;
    case GroupKind::direct_product: {
        if (factors_.size() != o.factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (!factors_[i]->same_as(*o.factors_[i])) return false;
        return true;
    }
    case GroupKind::quotient:
        return parent_->same_as(*o.parent_) && subgroup_ == o.subgroup_;
    }
    return false;
}

std::string Group::describe() const {
    switch (kind_) {
    case GroupKind::cyclic: return "C" + std::to_string(k_);
    case GroupKind::symmetric: return "S" + std::to_string(n_);
    case GroupKind::integers: return "Z";
    case GroupKind::direct_product: {
        std::string out;
        for (const auto& f : factors_) {
            if (!out.empty()) out += "x";
            out += f->describe();
        }
        return out;
    }
    case GroupKind::quotient:
        return parent_->describe() + "/N" + std::to_string(subgroup_.size());
    }
    return "?";
}

GroupElem Group::identity() const {
    if (kind_ == GroupKind::integers) return GroupElem(shared_from_this(), BigInt(0));
    return GroupElem(shared_from_this(), std::uint64_t{0});
}

GroupElem Group::at(std::uint64_t index) const {
    if (kind_ == GroupKind::integers)
        throw UnsupportedError("the integers group is not enumerable");
    if (index >= order()) throw PreconditionError("group element index out of range");
    return GroupElem(shared_from_this(), index);
}

std::uint64_t Group::index_of(const GroupElem& g) const {
    if (!g.group().same_as(*this)) throw DomainMismatchError("index_of: foreign group element");
    return g.index();
}

std::vector<GroupElem> Group::elements() const {
    if (!is_finite()) throw UnsupportedError("the integers group is not enumerable");
    guards::check_group_enum(order(), "group enumeration");
    std::vector<GroupElem> out;
    out.reserve(order());
    for (std::uint64_t i = 0; i < order(); ++i) out.push_back(at(i));
    return out;
}

GroupElem Group::op(const GroupElem& a, const GroupElem& b) const {
    require_same_group(a, b, "group op");
    switch (kind_) {
    case GroupKind::cyclic: {
        std::uint64_t s = (a.index() + b.index()) % static_cast<std::uint64_t>(k_);
        return GroupElem(shared_from_this(), s);
    }
    case GroupKind::symmetric: {
        const auto& p = perms_[a.index()];
        const auto& q = perms_[b.index()];
        std::vector<int> c(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            c[i] = p[static_cast<std::size_t>(q[i])]; // (p*q)(i) = p(q(i))
        auto it = std::lower_bound(perms_.begin(), perms_.end(), c);
        return GroupElem(shared_from_this(),
                         static_cast<std::uint64_t>(it - perms_.begin()));
    }
    case GroupKind::direct_product: {
        std::uint64_t ia = a.index(), ib = b.index(), out = 0, mult = 1;
        for (const auto& f : factors_) {
            std::uint64_t fo = f->order();
            GroupElem fa = f->at(ia % fo), fb = f->at(ib % fo);
            out += f->index_of(f->op(fa, fb)) * mult;
            ia /= fo;
            ib /= fo;
            mult *= fo;
        }
        return GroupElem(shared_from_this(), out);
    }
    case GroupKind::quotient: {
        GroupElem prod = parent_->op(parent_->at(coset_rep_[a.index()]),
                                     parent_->at(coset_rep_[b.index()]));
        return GroupElem(shared_from_this(), coset_of_[parent_->index_of(prod)]);
    }
    case GroupKind::integers:
        return GroupElem(shared_from_this(), a.integer() + b.integer());
    }
    throw Error("unreachable");
}

GroupElem Group::inverse(const GroupElem& a) const {
    switch (kind_) {
    case GroupKind::cyclic:
        return GroupElem(shared_from_this(),
                         a.index() == 0 ? 0 : static_cast<std::uint64_t>(k_) - a.index());
    case GroupKind::symmetric: {
        const auto& p = perms_[a.index()];
        std::vector<int> inv(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
        auto it = std::lower_bound(perms_.begin(), perms_.end(), inv);
        return GroupElem(shared_from_this(), static_cast<std::uint64_t>(it - perms_.begin()));
    }
    case GroupKind::direct_product: {
        std::uint64_t ia = a.index(), out = 0, mult = 1;
        for (const auto& f : factors_) {
            std::uint64_t fo = f->order();
            out += f->index_of(f->inverse(f->at(ia % fo))) * mult;
            ia /= fo;
            mult *= fo;
        }
        return GroupElem(shared_from_this(), out);
    }
    case GroupKind::quotient: {
        GroupElem inv = parent_->inverse(parent_->at(coset_rep_[a.index()]));
        return GroupElem(shared_from_this(), coset_of_[parent_->index_of(inv)]);
    }
    case GroupKind::integers:
        return GroupElem(shared_from_this(), BigInt(-a.integer()));
    }
    throw Error("unreachable");
}

const std::vector<int>& Group::one_line(const GroupElem& g) const {
    if (kind_ != GroupKind::symmetric) throw UnsupportedError("one_line: not a symmetric group");
    return perms_[g.index()];
}

GroupElem Group::coset_rep(const GroupElem& coset) const {
    if (kind_ != GroupKind::quotient) throw UnsupportedError("coset_rep: not a quotient group");
    return parent_->at(coset_rep_[coset.index()]);
}

GroupElem Group::coset_of(const GroupElem& parent_elem) const {
    if (kind_ != GroupKind::quotient) throw UnsupportedError("coset_of: not a quotient group");
    return GroupElem(shared_from_this(), coset_of_[parent_->index_of(parent_elem)]);
}

// ------------------------------------------------------------------- text

std::string Group::to_text(const GroupElem& g) const {
    switch (kind_) {
    case GroupKind::cyclic: return std::to_string(g.index());
    case GroupKind::symmetric: {
        const auto& p = perms_[g.index()];
        std::string out;
        for (int v : p) out += std::to_string(v + 1); // one-line notation, 1-based
        return out;
    }
    case GroupKind::direct_product: {
        std::uint64_t ia = g.index();
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::uint64_t fo = factors_[i]->order();
            if (i) out += ",";
            out += factors_[i]->to_text(factors_[i]->at(ia % fo));
            ia /= fo;
        }
        return out + ")";
    }
    case GroupKind::quotient: return parent_->to_text(coset_rep(g));
    case GroupKind::integers: return bigint_to_text(g.integer());
    }
    throw Error("unreachable");
}

GroupElem Group::parse(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    switch (kind_) {
    case GroupKind::cyclic: {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw ParseError("trailing junk in group literal '" + s + "'");
            std::int64_t r = v % k_;
            if (r < 0) r += k_;
            return GroupElem(shared_from_this(), static_cast<std::uint64_t>(r));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad cyclic group literal '" + s + "'");
        }
    }
    case GroupKind::symmetric: {
        if (static_cast<int>(s.size()) != n_)
            throw ParseError("one-line permutation literal needs " + std::to_string(n_) + " digits");
        std::vector<int> p;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad permutation literal '" + s + "'");
            p.push_back(c - '1');
        }
        auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
        if (it == perms_.end() || *it != p)
            throw ParseError("'" + s + "' is not a permutation of 1.." + std::to_string(n_));
        return GroupElem(shared_from_this(), static_cast<std::uint64_t>(it - perms_.begin()));
    }
    case GroupKind::direct_product: {
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw ParseError("product group literal must look like (a,b,...)");
        std::string body = s.substr(1, s.size() - 2);
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (char c : body) {
            if (c == '(') depth++;
            if (c == ')') depth--;
            if (c == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else cur += c;
        }
        parts.push_back(cur);
        if (parts.size() != factors_.size())
            throw ParseError("product literal needs " + std::to_string(factors_.size()) + " components");
        std::uint64_t out = 0, mult = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out += factors_[i]->index_of(factors_[i]->parse(parts[i])) * mult;
            mult *= factors_[i]->order();
        }
        return GroupElem(shared_from_this(), out);
    }
    case GroupKind::quotient: return coset_of(parent_->parse(s));
    case GroupKind::integers: return GroupElem(shared_from_this(), parse_bigint(s));
    }
    throw Error("unreachable");
}

// -------------------------------------------------------------- GroupElem

bool GroupElem::is_identity() const {
    if (owner_->kind() == GroupKind::integers) return integer() == 0;
    return index() == 0;
}

bool operator==(const GroupElem& a, const GroupElem& b) {
    if (!a.owner_ || !b.owner_) return a.owner_ == b.owner_;
    if (a.owner_.get() != b.owner_.get() && !a.owner_->same_as(*b.owner_)) return false;
    return a.payload_ == b.payload_;
}

bool operator<(const GroupElem& a, const GroupElem& b) {
    require_same_group(a, b, "compare");
    if (std::holds_alternative<BigInt>(a.payload_))
        return std::get<BigInt>(a.payload_) < std::get<BigInt>(b.payload_);
    return std::get<std::uint64_t>(a.payload_) < std::get<std::uint64_t>(b.payload_);
}

void require_same_group(const GroupElem& a, const GroupElem& b, const char* op) {
    if (a.group_ptr().get() == b.group_ptr().get()) return;
    if (!a.group().same_as(b.group()))
        throw DomainMismatchError(std::string(op) + ": elements from different groups");
}

// ------------------------------------------------------- derived queries

std::vector<GroupElem> group_center(const Group::Ptr& g) {
    if (!g->is_finite()) throw UnsupportedError("group_center: the integers group is not enumerable");
    guards::check_group_enum(g->order(), "group_center");
    std::vector<GroupElem> out;
    for (std::uint64_t i = 0; i < g->order(); ++i) {
        GroupElem z = g->at(i);
        bool central = true;
        for (std::uint64_t j = 0; j < g->order() && central; ++j)
            central = g->op(z, g->at(j)) == g->op(g->at(j), z);
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<GroupElem> cyclic_subgroup(const GroupElem& g) {
    const Group& G = g.group();
    if (!G.is_finite()) {
        if (g.integer() != 0)
            throw UnsupportedError("cyclic_subgroup: a nonzero integer generates an infinite set");
        return {g};
    }
    std::vector<GroupElem> out{G.identity()};
    GroupElem cur = g;
    while (!cur.is_identity()) {
        out.push_back(cur);
        cur = cur * g;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_normal_subgroup(const Group::Ptr& g, const std::vector<GroupElem>& subset) {
    if (!g->is_finite()) throw UnsupportedError("is_normal_subgroup: needs a finite group");
    guards::check_group_enum(g->order(), "is_normal_subgroup");
    std::set<std::uint64_t> sub;
    for (const auto& e : subset) sub.insert(g->index_of(e));
    if (!sub.count(0)) throw PreconditionError("subset does not contain the identity");
    for (auto i : sub) {
        if (!sub.count(g->index_of(g->inverse(g->at(i)))))
            throw PreconditionError("subset is not closed under inversion");
        for (auto j : sub)
            if (!sub.count(g->index_of(g->op(g->at(i), g->at(j)))))
                throw PreconditionError("subset is not closed under the group operation");
    }
    for (std::uint64_t x = 0; x < g->order(); ++x) {
        GroupElem gx = g->at(x), gxi = g->inverse(gx);
        for (auto i : sub) {
            GroupElem conj = g->op(g->op(gx, g->at(i)), gxi);
            if (!sub.count(g->index_of(conj))) return false;
        }
    }
    return true;
}

Group::Ptr quotient_group(const Group::Ptr& g, const std::vector<GroupElem>& normal_subgroup) {
    return Group::quotient(g, normal_subgroup);
}

Group::Ptr quotient_group_integers(const Group::Ptr& g, const BigInt& modulus) {
    if (g->kind() != GroupKind::integers)
        throw UnsupportedError("quotient_group_integers: not the integers group");
    if (modulus <= 0) throw PreconditionError("integer quotient needs a positive modulus m (N = mZ)");
    return Group::cyclic(modulus.convert_to<std::int64_t>());
}

} // namespace crossed_forge
