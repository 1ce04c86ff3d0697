#include "crossed_forge/crossed_system.hpp"

#include "crossed_forge/guards.hpp"

#include <algorithm>

namespace crossed_forge {

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::string out = std::to_string(issues.size()) + " violation(s)";
    for (std::size_t i = 0; i < issues.size() && i < 3; ++i)
        out += "; " + issues[i].condition + " at " + issues[i].witness;
    return out;
}

namespace {

constexpr std::size_t kMaxWitnessesPerCondition = 10;

void add_issue(ValidationReport& rep, const std::string& condition, const std::string& witness) {
    std::size_t same = 0;
    for (const auto& i : rep.issues)
        if (i.condition == condition) ++same;
    if (same < kMaxWitnessesPerCondition) rep.issues.push_back({condition, witness});
}

std::vector<RingElem> trivial_alpha_table(const Ring::Ptr& ring, const Group::Ptr& group) {
    if (!group->is_finite()) return {};
    std::uint64_t n = group->order();
    return std::vector<RingElem>(n * n, ring->one());
}

} // namespace

CrossedSystem::Ptr CrossedSystem::make_unchecked(Ring::Ptr ring, Group::Ptr group,
                                                 std::vector<RingAutomorphism> sigma,
                                                 std::vector<RingElem> alpha) {
    if (!ring || !group) throw PreconditionError("crossed system needs a ring and a group");
    auto sys = std::shared_ptr<CrossedSystem>(new CrossedSystem());
    sys->ring_ = std::move(ring);
    sys->group_ = std::move(group);

    if (sys->group_->is_finite()) {
        std::uint64_t n = sys->group_->order();
        if (sigma.empty())
            sigma.assign(n, RingAutomorphism::identity(sys->ring_));
        if (sigma.size() != n)
            throw PreconditionError("sigma table needs one automorphism per group element");
        if (alpha.empty())
            alpha = trivial_alpha_table(sys->ring_, sys->group_);
        if (alpha.size() != n * n)
            throw PreconditionError("alpha table needs |G|^2 entries");
        sys->alpha_trivial_ =
            std::all_of(alpha.begin(), alpha.end(), [](const RingElem& a) { return a.is_one(); });
        if (sys->alpha_trivial_) alpha.clear();
    } else {
        if (sigma.size() != 1)
            throw PreconditionError("the integers group takes exactly the generator automorphism");
        if (!alpha.empty())
            throw UnsupportedError("only the trivial cocycle is supported over the integers group");
        sys->alpha_trivial_ = true;
    }
    for (const auto& phi : sigma)
        if (!phi.ring()->same_as(*sys->ring_))
            throw DomainMismatchError("sigma entry acts on a different ring");
    for (const auto& a : alpha)
        if (!a.ring().same_as(*sys->ring_))
            throw DomainMismatchError("alpha entry from a different ring");
    sys->sigma_ = std::move(sigma);
    sys->alpha_ = std::move(alpha);
    return sys;
}

// The friend hook lets the builders flip validated_ after a clean report.
class ValidationAccess {
public:
    static void mark(const CrossedSystem::Ptr& sys) {
        const_cast<CrossedSystem&>(*sys).validated_ = true;
    }
};

CrossedSystem::Ptr CrossedSystem::group_ring(Ring::Ptr ring, Group::Ptr group) {
    std::vector<RingAutomorphism> sigma;
    if (!group->is_finite()) sigma.push_back(RingAutomorphism::identity(ring));
    auto sys = make_unchecked(std::move(ring), std::move(group), std::move(sigma), {});
    ValidationReport rep = verify_crossed_system(*sys);
    if (!rep.valid()) throw ValidationError("group_ring", rep);
    ValidationAccess::mark(sys);
    return sys;
}

CrossedSystem::Ptr CrossedSystem::twisted_group_ring(Ring::Ptr ring, Group::Ptr group,
                                                     std::vector<RingElem> alpha) {
    auto sys = make_unchecked(std::move(ring), std::move(group), {}, std::move(alpha));
    ValidationReport rep = verify_crossed_system(*sys);
    if (!rep.valid()) throw ValidationError("twisted_group_ring", rep);
    ValidationAccess::mark(sys);
    return sys;
}

CrossedSystem::Ptr CrossedSystem::action_only(Ring::Ptr ring, Group::Ptr group,
                                              std::vector<RingAutomorphism> sigma) {
    auto sys = make_unchecked(std::move(ring), std::move(group), std::move(sigma), {});
    ValidationReport rep = verify_crossed_system(*sys);
    if (!rep.valid()) throw ValidationError("action_only", rep);
    ValidationAccess::mark(sys);
    return sys;
}

CrossedSystem::Ptr CrossedSystem::full(Ring::Ptr ring, Group::Ptr group,
                                       std::vector<RingAutomorphism> sigma,
                                       std::vector<RingElem> alpha) {
    auto sys = make_unchecked(std::move(ring), std::move(group), std::move(sigma), std::move(alpha));
    ValidationReport rep = verify_crossed_system(*sys);
    if (!rep.valid()) throw ValidationError("full", rep);
    ValidationAccess::mark(sys);
    return sys;
}

CrossedSystem::Ptr CrossedSystem::cyclic_action(Ring::Ptr ring, Group::Ptr group,
                                                const RingAutomorphism& generator) {
    if (group->kind() == GroupKind::integers)
        return action_only(std::move(ring), std::move(group), {generator});
    if (group->kind() != GroupKind::cyclic)
        throw UnsupportedError("cyclic_action needs a cyclic or integers group");
    std::vector<RingAutomorphism> sigma;
    RingAutomorphism acc = RingAutomorphism::identity(ring);
    for (std::int64_t i = 0; i < group->cyclic_order(); ++i) {
        sigma.push_back(acc);
        acc = generator.compose(acc);
    }
    return action_only(std::move(ring), std::move(group), std::move(sigma));
}

RingAutomorphism CrossedSystem::sigma(const GroupElem& g) const {
    if (!g.group().same_as(*group_)) throw DomainMismatchError("sigma: foreign group element");
    if (group_->is_finite()) return sigma_[g.index()];
    return sigma_[0].power(g.integer());
}

const RingAutomorphism& CrossedSystem::sigma_generator() const {
    if (!group_->is_finite()) return sigma_[0];
    if (group_->kind() == GroupKind::cyclic && group_->order() > 1) return sigma_[1];
    return sigma_[0];
}

RingElem CrossedSystem::alpha(const GroupElem& s, const GroupElem& t) const {
    if (alpha_trivial_) return ring_->one();
    std::uint64_t n = group_->order();
    return alpha_[s.index() * n + t.index()];
}

bool CrossedSystem::sigma_is_trivial() const {
    return std::all_of(sigma_.begin(), sigma_.end(),
                       [](const RingAutomorphism& p) { return p.is_identity(); });
}

bool CrossedSystem::alpha_is_symmetric() const {
    if (alpha_trivial_) return true;
    std::uint64_t n = group_->order();
    for (std::uint64_t s = 0; s < n; ++s)
        for (std::uint64_t t = s + 1; t < n; ++t)
            if (!(alpha_[s * n + t] == alpha_[t * n + s])) return false;
    return true;
}

std::uint64_t CrossedSystem::product_size() const {
    if (!ring_->is_finite() || !group_->is_finite())
        throw UnsupportedError("product_size: infinite system");
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < group_->order(); ++i) {
        if (size > (1ULL << 62) / ring_->size())
            throw EnumerationLimitError("crossed product size overflows");
        size *= ring_->size();
    }
    return size;
}

std::string CrossedSystem::describe() const {
    std::string action = sigma_is_trivial() ? "trivial action" : "nontrivial action";
    std::string twist = alpha_trivial_ ? "trivial cocycle" : "nontrivial cocycle";
    return ring_->describe() + " x| " + group_->describe() + " (" + action + ", " + twist + ")";
}

void CrossedSystem::require_validated(const char* op) const {
    if (!validated_) {
        ValidationReport rep = verify_crossed_system(*this);
        if (!rep.valid())
            throw ValidationError(std::string(op) + " needs a valid crossed system", rep);
        const_cast<CrossedSystem*>(this)->validated_ = true; // memoize the clean verdict
    }
}

ValidationReport verify_crossed_system(const CrossedSystem& sys) {
    ValidationReport rep;
    const Ring::Ptr& A = sys.ring_;
    const Group::Ptr& G = sys.group_;

    if (!G->is_finite()) {
        // sigma_n = sigma_1^n makes the action a homomorphism and the trivial
        // cocycle satisfies the remaining laws by construction.
        return rep;
    }

    guards::check_group_enum(G->order(), "verify_crossed_system");
    if (!A->is_finite())
        throw UnsupportedError("verify_crossed_system: finite-group systems need a finite ring");
    guards::check_ring_enum(A->size(), "verify_crossed_system");

    std::uint64_t n = G->order();
    auto gtxt = [&](std::uint64_t i) { return G->to_text(G->at(i)); };

    if (!sys.sigma_[0].is_identity())
        add_issue(rep, "sigma-identity-at-e", "sigma_e = " + sys.sigma_[0].describe());

    for (std::uint64_t s = 0; s < n; ++s)
        for (std::uint64_t t = 0; t < n; ++t) {
            RingElem a = sys.alpha(G->at(s), G->at(t));
            if (!a.is_unit())
                add_issue(rep, "alpha-unit",
                          "alpha(" + gtxt(s) + "," + gtxt(t) + ") = " + a.to_text());
        }
    if (!rep.issues.empty() &&
        std::any_of(rep.issues.begin(), rep.issues.end(),
                    [](const ValidationIssue& i) { return i.condition == "alpha-unit"; })) {
        // conditions (i) and (ii) need alpha inverses; report what we have
        return rep;
    }

    // alpha(x, e) = alpha(e, x) = 1
    for (std::uint64_t x = 0; x < n; ++x) {
        GroupElem gx = G->at(x), ge = G->at(0);
        if (!sys.alpha(gx, ge).is_one())
            add_issue(rep, "cocycle-normalization",
                      "alpha(" + gtxt(x) + ",e) = " + sys.alpha(gx, ge).to_text());
        if (!sys.alpha(ge, gx).is_one())
            add_issue(rep, "cocycle-normalization",
                      "alpha(e," + gtxt(x) + ") = " + sys.alpha(ge, gx).to_text());
    }

    // sigma_x(sigma_y(a)) = alpha(x,y) sigma_{xy}(a) alpha(x,y)^{-1}
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            GroupElem gx = G->at(x), gy = G->at(y);
            GroupElem gxy = G->op(gx, gy);
            RingElem al = sys.alpha(gx, gy);
            RingElem al_inv = *al.inverse();
            const RingAutomorphism& sx = sys.sigma_[x];
            const RingAutomorphism& sy = sys.sigma_[y];
            const RingAutomorphism& sxy = sys.sigma_[gxy.index()];
            for (std::uint64_t ai = 0; ai < A->size(); ++ai) {
                RingElem a = A->element_at(ai);
                RingElem lhs = sx.apply(sy.apply(a));
                RingElem rhs = al * sxy.apply(a) * al_inv;
                if (!(lhs == rhs)) {
                    add_issue(rep, "action-compatibility",
                              "(x,y,a) = (" + gtxt(x) + "," + gtxt(y) + "," + a.to_text() + ")");
                    break;
                }
            }
        }

    // alpha(x,y) alpha(xy,z) = sigma_x(alpha(y,z)) alpha(x,yz)
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
            for (std::uint64_t z = 0; z < n; ++z) {
                GroupElem gx = G->at(x), gy = G->at(y), gz = G->at(z);
                RingElem lhs = sys.alpha(gx, gy) * sys.alpha(G->op(gx, gy), gz);
                RingElem rhs = sys.sigma_[x].apply(sys.alpha(gy, gz)) * sys.alpha(gx, G->op(gy, gz));
                if (!(lhs == rhs))
                    add_issue(rep, "cocycle-identity",
                              "(x,y,z) = (" + gtxt(x) + "," + gtxt(y) + "," + gtxt(z) + ")");
            }

    return rep;
}

std::vector<RingElem> fixed_ring(const CrossedSystem::Ptr& sys) {
    const Ring::Ptr& A = sys->ring();
    if (!A->is_finite())
        throw UnsupportedError("fixed_ring: ring is not enumerable (" + A->describe() + ")");
    guards::check_ring_enum(A->size(), "fixed_ring");

    std::vector<RingAutomorphism> maps;
    if (sys->group()->is_finite()) {
        guards::check_group_enum(sys->group()->order(), "fixed_ring");
        for (std::uint64_t i = 0; i < sys->group()->order(); ++i)
            maps.push_back(sys->sigma(sys->group()->at(i)));
    } else {
        maps.push_back(sys->sigma_generator());
    }

    std::vector<RingElem> out;
    for (std::uint64_t i = 0; i < A->size(); ++i) {
        RingElem a = A->element_at(i);
        bool fixed = std::all_of(maps.begin(), maps.end(), [&](const RingAutomorphism& phi) {
            return phi.apply(a) == a;
        });
        if (fixed) out.push_back(std::move(a));
    }
    return out;
}

bool SigmaKernel::is_trivial(const CrossedSystem& sys) const {
    if (modulus) return *modulus == 0;
    (void)sys;
    return elements.size() == 1;
}

bool SigmaKernel::contains(const GroupElem& g) const {
    if (modulus) {
        if (*modulus == 0) return g.integer() == 0;
        return g.integer() % *modulus == 0;
    }
    return std::binary_search(elements.begin(), elements.end(), g);
}

SigmaKernel sigma_kernel(const CrossedSystem::Ptr& sys) {
    SigmaKernel out;
    if (sys->group()->is_finite()) {
        guards::check_group_enum(sys->group()->order(), "sigma_kernel");
        for (std::uint64_t i = 0; i < sys->group()->order(); ++i) {
            GroupElem g = sys->group()->at(i);
            if (sys->sigma(g).is_identity()) out.elements.push_back(g);
        }
        // the kernel must come back as a subgroup
        for (const auto& a : out.elements)
            for (const auto& b : out.elements) {
                GroupElem ab = a * b;
                if (!std::binary_search(out.elements.begin(), out.elements.end(), ab))
                    throw Error("sigma kernel failed its subgroup check");
            }
    } else {
        out.modulus = BigInt(sys->sigma_generator().order());
    }
    return out;
}

} // namespace crossed_forge
