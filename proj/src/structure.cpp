#include "crossed_forge/structure.hpp"

#include "crossed_forge/guards.hpp"

#include <algorithm>

namespace crossed_forge {

namespace {

// R = {r | r phi(a) = a r for all a}, by enumeration
std::vector<RingElem> constraint_set(const Ring::Ptr& A, const RingAutomorphism& phi) {
    guards::check_ring_enum(A->size(), "commutant_constraints");
    std::uint64_t n = A->size();
    guards::check_product_enum(n * n, "commutant_constraints");
    std::vector<RingElem> out;
    for (std::uint64_t ri = 0; ri < n; ++ri) {
        RingElem r = A->element_at(ri);
        bool ok = true;
        for (std::uint64_t ai = 0; ai < n && ok; ++ai) {
            RingElem a = A->element_at(ai);
            ok = r * phi.apply(a) == a * r;
        }
        if (ok) out.push_back(std::move(r));
    }
    return out;
}

BigInt residue_of(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

} // namespace

bool CoefficientConstraintSet::contains(const GroupElem& s, const RingElem& r) const {
    if (laurent_dichotomy) {
        if (r.is_zero()) return true;
        const BigInt& m = *kernel_modulus;
        if (m == 0) return s.integer() == 0;
        return s.integer() % m == 0;
    }
    if (kernel_modulus) { // finite ring over the integers
        BigInt m = per_residue.empty() ? BigInt(1) : BigInt(per_residue.size());
        std::size_t idx = residue_of(s.integer(), m).convert_to<std::size_t>();
        const auto& set = per_residue[idx];
        return std::binary_search(set.begin(), set.end(), r);
    }
    const auto& set = per_degree[s.index()];
    return std::binary_search(set.begin(), set.end(), r);
}

bool CoefficientConstraintSet::trivial_at(const GroupElem& s) const {
    if (laurent_dichotomy) {
        const BigInt& m = *kernel_modulus;
        bool in_kernel = m == 0 ? s.integer() == 0 : s.integer() % m == 0;
        return !in_kernel;
    }
    if (kernel_modulus) {
        BigInt m = BigInt(per_residue.size());
        std::size_t idx = residue_of(s.integer(), m).convert_to<std::size_t>();
        return per_residue[idx].size() == 1; // just {0}
    }
    return per_degree[s.index()].size() == 1;
}

std::optional<std::pair<GroupElem, RingElem>> CoefficientConstraintSet::nontrivial_witness() const {
    if (laurent_dichotomy) {
        const BigInt& m = *kernel_modulus;
        if (m == 0 || m == 1) {
            if (m == 1) // sigma_1 = id: degree 1 already carries everything
                return std::make_pair(GroupElem(system->group(), BigInt(1)), system->ring()->one());
            return std::nullopt;
        }
        return std::make_pair(GroupElem(system->group(), m), system->ring()->one());
    }
    if (kernel_modulus) {
        for (std::size_t rdx = 1; rdx < per_residue.size(); ++rdx)
            if (per_residue[rdx].size() > 1)
                return std::make_pair(GroupElem(system->group(), BigInt(rdx)), per_residue[rdx][1]);
        return std::nullopt;
    }
    for (std::size_t i = 1; i < per_degree.size(); ++i)
        if (per_degree[i].size() > 1)
            return std::make_pair(system->group()->at(i), per_degree[i][1]);
    return std::nullopt;
}

CoefficientConstraintSet commutant_constraints(const CrossedSystem::Ptr& sys) {
    sys->require_validated("commutant_constraints");
    CoefficientConstraintSet out;
    out.system = sys;
    const Ring::Ptr& A = sys->ring();
    const Group::Ptr& G = sys->group();

    if (G->is_finite()) {
        if (!A->is_finite())
            throw UnsupportedError("commutant_constraints: finite groups need a finite ring");
        guards::check_group_enum(G->order(), "commutant_constraints");
        for (std::uint64_t i = 0; i < G->order(); ++i)
            out.per_degree.push_back(constraint_set(A, sys->sigma(G->at(i))));
        return out;
    }

    SigmaKernel ker = sigma_kernel(sys);
    out.kernel_modulus = ker.modulus;
    if (!A->is_finite()) {
        // integral domain: R_s = A on the kernel and {0} elsewhere
        out.laurent_dichotomy = true;
        return out;
    }
    std::int64_t m = ker.modulus->convert_to<std::int64_t>();
    if (m == 0)
        throw UnsupportedError("commutant_constraints: infinite-order action on a finite ring "
                               "cannot happen; kernel modulus 0 is unsupported here");
    for (std::int64_t r = 0; r < m; ++r)
        out.per_residue.push_back(constraint_set(A, sys->sigma_generator().power(BigInt(r))));
    return out;
}

bool commutant_membership(const CrossedElem& u) {
    const CrossedSystem::Ptr& sys = u.system();
    CoefficientConstraintSet cs = commutant_constraints(sys);
    bool described = true;
    for (const auto& [g, c] : u.coeffs())
        if (!cs.contains(g, c)) {
            described = false;
            break;
        }
    // cross-check against the defining relation when the ring is enumerable
    if (sys->ring()->is_finite() && sys->ring()->size() <= guards::ring_enum_limit()) {
        bool defining = true;
        for (std::uint64_t ai = 0; ai < sys->ring()->size() && defining; ++ai)
            defining = commutes_direct(u, embed(sys, sys->ring()->element_at(ai)));
        if (defining != described)
            throw Error("internal: commutant membership routes disagree");
    }
    return described;
}

std::vector<CrossedElem> enumerate_commutant(const CrossedSystem::Ptr& sys) {
    CoefficientConstraintSet cs = commutant_constraints(sys);
    if (!sys->group()->is_finite())
        throw UnsupportedError("enumerate_commutant: infinite support lattice");
    std::uint64_t combos = 1;
    for (const auto& set : cs.per_degree) {
        if (combos > guards::product_enum_limit() / std::max<std::size_t>(set.size(), 1))
            guards::check_product_enum(guards::product_enum_limit() + 1, "enumerate_commutant");
        combos *= set.size();
    }
    guards::check_product_enum(combos, "enumerate_commutant");

    std::vector<CrossedElem> out;
    std::vector<std::size_t> pick(cs.per_degree.size(), 0);
    while (true) {
        CrossedElem e(sys);
        for (std::size_t i = 0; i < pick.size(); ++i) {
            const RingElem& c = cs.per_degree[i][pick[i]];
            if (!c.is_zero()) e = e + CrossedElem::single(sys, sys->group()->at(i), c);
        }
        out.push_back(std::move(e));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < cs.per_degree[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------------ center

namespace {

// the translation condition coupling the degrees of a central element:
// r_{t s^-1} alpha(t s^-1, s) = sigma_s(r_{s^-1 t}) alpha(s, s^-1 t)
bool center_translation_ok(const CrossedSystem::Ptr& sys,
                           const std::vector<RingElem>& r_by_index) {
    const Group::Ptr& G = sys->group();
    std::uint64_t n = G->order();
    for (std::uint64_t si = 0; si < n; ++si) {
        GroupElem s = G->at(si), sinv = G->inverse(s);
        RingAutomorphism sig = sys->sigma(s);
        for (std::uint64_t ti = 0; ti < n; ++ti) {
            GroupElem t = G->at(ti);
            GroupElem u = G->op(t, sinv), v = G->op(sinv, t);
            RingElem lhs = r_by_index[u.index()] * sys->alpha(u, s);
            RingElem rhs = sig.apply(r_by_index[v.index()]) * sys->alpha(s, v);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

} // namespace

CenterDescription center_compute(const CrossedSystem::Ptr& sys) {
    sys->require_validated("center_compute");
    CenterDescription out;
    const Ring::Ptr& A = sys->ring();
    const Group::Ptr& G = sys->group();

    if (!G->is_finite()) {
        SigmaKernel ker = sigma_kernel(sys);
        out.support_modulus = ker.modulus;
        if (A->is_finite()) {
            CoefficientConstraintSet cs = commutant_constraints(sys);
            std::vector<RingElem> fixed = fixed_ring(sys);
            for (const auto& set : cs.per_residue) {
                std::vector<RingElem> both;
                std::set_intersection(set.begin(), set.end(), fixed.begin(), fixed.end(),
                                      std::back_inserter(both));
                out.per_residue_coeffs.push_back(std::move(both));
            }
            out.text = "support on " + bigint_to_text(*ker.modulus) +
                       "Z with per-residue coefficients from the fixed ring";
        } else {
            std::int64_t d = sys->sigma_generator().order();
            out.fixed_exponent_modulus = d;
            out.text = "support on " + bigint_to_text(*ker.modulus) +
                       "Z, coefficients with exponents on " + std::to_string(d) + "Z";
        }
        return out;
    }

    // characterization route: per-degree candidates, then the translation law
    CoefficientConstraintSet cs = commutant_constraints(sys);
    std::uint64_t combos = 1;
    for (const auto& set : cs.per_degree) {
        if (combos > guards::product_enum_limit() / std::max<std::size_t>(set.size(), 1))
            guards::check_product_enum(guards::product_enum_limit() + 1, "center_compute");
        combos *= set.size();
    }
    guards::check_product_enum(combos, "center_compute");

    std::vector<CrossedElem> result;
    std::vector<std::size_t> pick(cs.per_degree.size(), 0);
    std::vector<RingElem> r_by_index(cs.per_degree.size(), A->zero());
    while (true) {
        for (std::size_t i = 0; i < pick.size(); ++i) r_by_index[i] = cs.per_degree[i][pick[i]];
        if (center_translation_ok(sys, r_by_index)) {
            CrossedElem e(sys);
            for (std::size_t i = 0; i < pick.size(); ++i)
                if (!r_by_index[i].is_zero())
                    e = e + CrossedElem::single(sys, G->at(i), r_by_index[i]);
            result.push_back(std::move(e));
        }
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < cs.per_degree[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(result.begin(), result.end());

    // oracle route: definition-level brute force over the whole product
    if (sys->product_size() <= guards::product_enum_limit()) {
        FiniteModel model(sys, "center_compute oracle");
        std::vector<std::uint64_t> codes = model.brute_center();
        if (codes.size() != result.size())
            throw Error("internal: center characterization and brute force disagree on size");
        std::vector<CrossedElem> brute;
        brute.reserve(codes.size());
        for (auto c : codes) brute.push_back(model.to_elem(model.decode(c)));
        std::sort(brute.begin(), brute.end());
        for (std::size_t i = 0; i < brute.size(); ++i)
            if (!(brute[i] == result[i]))
                throw Error("internal: center characterization and brute force disagree");
    }

    out.elements = std::move(result);
    out.text = "explicit element set";
    return out;
}

bool center_membership(const CrossedElem& u) {
    const CrossedSystem::Ptr& sys = u.system();
    sys->require_validated("center_membership");
    const Group::Ptr& G = sys->group();

    if (!G->is_finite()) {
        CoefficientConstraintSet cs = commutant_constraints(sys);
        const RingAutomorphism& s1 = sys->sigma_generator();
        for (const auto& [g, c] : u.coeffs()) {
            if (!cs.contains(g, c)) return false;
            if (!(s1.apply(c) == c)) return false; // coefficient must sit in the fixed ring
        }
        return true;
    }

    const Ring::Ptr& A = sys->ring();
    guards::check_ring_enum(A->size(), "center_membership");
    std::vector<RingElem> r_by_index(G->order(), A->zero());
    for (const auto& [g, c] : u.coeffs()) r_by_index[g.index()] = c;

    bool verdict = true;
    for (std::uint64_t si = 0; si < G->order() && verdict; ++si) {
        const RingElem& r = r_by_index[si];
        if (r.is_zero()) continue;
        RingAutomorphism sig = sys->sigma(G->at(si));
        for (std::uint64_t ai = 0; ai < A->size() && verdict; ++ai) {
            RingElem a = A->element_at(ai);
            verdict = r * sig.apply(a) == a * r;
        }
    }
    if (verdict) verdict = center_translation_ok(sys, r_by_index);

    // cross-check: commuting with every single-term element is equivalent
    if (A->size() * G->order() <= guards::product_enum_limit()) {
        bool brute = true;
        for (std::uint64_t gi = 0; gi < G->order() && brute; ++gi)
            for (std::uint64_t ai = 0; ai < A->size() && brute; ++ai)
                brute = commutes_direct(
                    u, CrossedElem::single(sys, G->at(gi), A->element_at(ai)));
        if (brute != verdict) throw Error("internal: center membership routes disagree");
    }
    return verdict;
}

// --------------------------------------------------------------- verdicts

CommutativityVerdict is_commutative(const CrossedSystem::Ptr& sys) {
    sys->require_validated("is_commutative");
    CommutativityVerdict v;
    const Group::Ptr& G = sys->group();

    if (!sys->ring()->is_commutative()) {
        v.violated_condition = "base-ring-commutative";
        v.witness = sys->ring()->describe();
        return v;
    }
    if (G->is_finite()) {
        for (std::uint64_t i = 0; i < G->order(); ++i) {
            RingAutomorphism sig = sys->sigma(G->at(i));
            if (!sig.is_identity()) {
                v.violated_condition = "action-trivial";
                v.witness = "sigma_" + G->to_text(G->at(i)) + " = " + sig.describe();
                return v;
            }
        }
    } else if (!sys->sigma_generator().is_identity()) {
        v.violated_condition = "action-trivial";
        v.witness = "sigma_1 = " + sys->sigma_generator().describe();
        return v;
    }
    if (!G->is_abelian()) {
        for (std::uint64_t i = 0; i < G->order(); ++i)
            for (std::uint64_t j = i + 1; j < G->order(); ++j) {
                GroupElem a = G->at(i), b = G->at(j);
                if (!(a * b == b * a)) {
                    v.violated_condition = "group-abelian";
                    v.witness = "(" + a.to_text() + ", " + b.to_text() + ")";
                    return v;
                }
            }
    }
    if (!sys->alpha_is_symmetric()) {
        for (std::uint64_t i = 0; i < G->order(); ++i)
            for (std::uint64_t j = 0; j < G->order(); ++j) {
                GroupElem a = G->at(i), b = G->at(j);
                if (!(sys->alpha(a, b) == sys->alpha(b, a))) {
                    v.violated_condition = "cocycle-symmetric";
                    v.witness = "alpha(" + a.to_text() + "," + b.to_text() + ") != alpha(" +
                                b.to_text() + "," + a.to_text() + ")";
                    return v;
                }
            }
    }
    v.value = true;

    // small systems: confirm against brute-force pairwise commuting
    if (sys->ring()->is_finite() && G->is_finite() &&
        sys->product_size() <= 4096) {
        FiniteModel model(sys, "is_commutative cross-check");
        std::pair<std::uint64_t, std::uint64_t> w;
        if (!all_pairs_commute(model, &w))
            throw Error("internal: commutativity criterion contradicts brute force");
    }
    return v;
}

MaximalityVerdict is_maximal_commutative(const CrossedSystem::Ptr& sys) {
    sys->require_validated("is_maximal_commutative");
    if (!sys->ring()->is_commutative())
        throw UnsupportedError("is_maximal_commutative: defined over commutative bases only");
    MaximalityVerdict out;

    std::optional<bool> fast;
    if (sys->ring()->is_integral_domain()) {
        SigmaKernel ker = sigma_kernel(sys);
        fast = ker.is_trivial(*sys);
        out.via_domain_fast_path = true;
        if (!*fast) {
            if (ker.modulus) {
                out.witness_degree = GroupElem(sys->group(), *ker.modulus == 0 ? BigInt(1) : *ker.modulus);
            } else {
                for (const auto& g : ker.elements)
                    if (!g.is_identity()) { out.witness_degree = g; break; }
            }
            out.witness_coefficient = sys->ring()->one();
        }
    }

    if (!sys->group()->is_finite() && !fast)
        throw UnsupportedError("is_maximal_commutative over the integers group needs an "
                               "integral domain base (the general criterion does not "
                               "terminate on infinite groups)");

    if (sys->group()->is_finite() && sys->ring()->is_finite()) {
        CoefficientConstraintSet cs = commutant_constraints(sys);
        auto witness = cs.nontrivial_witness();
        bool general = !witness.has_value();
        if (fast && *fast != general)
            throw Error("internal: domain fast path and per-degree criterion disagree");
        out.value = general;
        if (witness) {
            out.witness_degree = witness->first;
            out.witness_coefficient = witness->second;
        }
        return out;
    }

    out.value = *fast;
    return out;
}

CommutantCommutativityVerdict commutant_is_commutative(const CrossedSystem::Ptr& sys) {
    sys->require_validated("commutant_is_commutative");
    CommutantCommutativityVerdict out;
    if (sys->ring()->is_commutative() && sys->group()->is_abelian() && sys->alpha_is_symmetric()) {
        out.value = true;
        out.by_hypotheses = true;
        return out;
    }
    std::vector<CrossedElem> comm = enumerate_commutant(sys);
    for (std::size_t i = 0; i < comm.size(); ++i)
        for (std::size_t j = i + 1; j < comm.size(); ++j)
            if (!commutes_direct(comm[i], comm[j])) {
                out.witness = std::make_pair(comm[i], comm[j]);
                return out;
            }
    out.value = true;
    return out;
}

bool all_pairs_commute(const FiniteModel& model, std::pair<std::uint64_t, std::uint64_t>* witness) {
    for (std::uint64_t i = 1; i < model.total(); ++i) {
        FiniteModel::Word wi = model.decode(i);
        for (std::uint64_t j = i + 1; j < model.total(); ++j) {
            FiniteModel::Word wj = model.decode(j);
            if (!(model.mul(wi, wj) == model.mul(wj, wi))) {
                if (witness) *witness = {i, j};
                return false;
            }
        }
    }
    return true;
}

StructureReport analyze_structure(const CrossedSystem::Ptr& sys) {
    StructureReport rep;
    rep.commutative = is_commutative(sys);
    try {
        rep.commutant = commutant_constraints(sys);
    } catch (const EnumerationLimitError&) {
    } catch (const UnsupportedError&) {
    }
    try {
        rep.center = center_compute(sys);
    } catch (const EnumerationLimitError&) {
    } catch (const UnsupportedError&) {
    }
    try {
        rep.maximal = is_maximal_commutative(sys);
    } catch (const UnsupportedError&) {
    }
    try {
        rep.commutant_commutative = commutant_is_commutative(sys);
    } catch (const EnumerationLimitError&) {
    } catch (const UnsupportedError&) {
    }
    return rep;
}

} // namespace crossed_forge
