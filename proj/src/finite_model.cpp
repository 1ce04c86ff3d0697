#include "crossed_forge/finite_model.hpp"

#include "crossed_forge/guards.hpp"

namespace crossed_forge {

FiniteModel::FiniteModel(CrossedSystem::Ptr sys, const char* context) : sys_(std::move(sys)) {
    sys_->require_validated(context);
    const Ring::Ptr& A = sys_->ring();
    const Group::Ptr& G = sys_->group();
    if (!A->is_finite() || !G->is_finite())
        throw UnsupportedError(std::string(context) + ": needs a finite system");
    guards::check_group_enum(G->order(), context);
    if (A->size() > 2048)
        throw EnumerationLimitError(std::string(context) +
                                    ": coefficient ring too large for table construction");
    nA_ = static_cast<std::uint32_t>(A->size());
    nG_ = static_cast<std::uint32_t>(G->order());
    const std::uint64_t limit = guards::product_enum_limit();
    total_ = 1;
    bool overflow = false;
    for (std::uint32_t i = 0; i < nG_ && !overflow; ++i) {
        if (total_ > limit / nA_) overflow = true;
        else total_ *= nA_;
    }
    if (overflow)
        throw EnumerationLimitError(std::string(context) + ": crossed product of " +
                                    sys_->describe() + " exceeds the product-space guard " +
                                    std::to_string(limit) +
                                    " (set CROSSED_FORGE_MAX_ENUM to override)");
    guards::check_product_enum(total_, context);

    std::vector<RingElem> elems;
    elems.reserve(nA_);
    for (std::uint32_t i = 0; i < nA_; ++i) elems.push_back(A->element_at(i));

    radd_.resize(std::size_t(nA_) * nA_);
    rmul_.resize(std::size_t(nA_) * nA_);
    rneg_.resize(nA_);
    for (std::uint32_t i = 0; i < nA_; ++i) {
        rneg_[i] = static_cast<std::uint32_t>(A->index_of(-elems[i]));
        for (std::uint32_t j = 0; j < nA_; ++j) {
            radd_[std::size_t(i) * nA_ + j] = static_cast<std::uint32_t>(A->index_of(elems[i] + elems[j]));
            rmul_[std::size_t(i) * nA_ + j] = static_cast<std::uint32_t>(A->index_of(elems[i] * elems[j]));
        }
    }

    sig_.assign(nG_, std::vector<std::uint32_t>(nA_));
    alpha_.resize(std::size_t(nG_) * nG_);
    gmul_.resize(std::size_t(nG_) * nG_);
    ginv_.resize(nG_);
    for (std::uint32_t g = 0; g < nG_; ++g) {
        GroupElem ge = G->at(g);
        RingAutomorphism phi = sys_->sigma(ge);
        for (std::uint32_t i = 0; i < nA_; ++i)
            sig_[g][i] = static_cast<std::uint32_t>(A->index_of(phi.apply(elems[i])));
        ginv_[g] = static_cast<std::uint32_t>(G->index_of(G->inverse(ge)));
        for (std::uint32_t h = 0; h < nG_; ++h) {
            GroupElem he = G->at(h);
            alpha_[std::size_t(g) * nG_ + h] =
                static_cast<std::uint32_t>(A->index_of(sys_->alpha(ge, he)));
            gmul_[std::size_t(g) * nG_ + h] = static_cast<std::uint32_t>(G->index_of(G->op(ge, he)));
        }
    }

    for (const auto& gen : A->additive_generators())
        addgens_.push_back(static_cast<std::uint32_t>(A->index_of(gen)));
    one_idx_ = static_cast<std::uint32_t>(A->index_of(A->one()));
}

std::uint64_t FiniteModel::encode(const Word& w) const {
    std::uint64_t code = 0, mult = 1;
    for (std::uint32_t i = 0; i < nG_; ++i) {
        code += w[i] * mult;
        mult *= nA_;
    }
    return code;
}

FiniteModel::Word FiniteModel::decode(std::uint64_t code) const {
    Word w(nG_);
    for (std::uint32_t i = 0; i < nG_; ++i) {
        w[i] = static_cast<std::uint32_t>(code % nA_);
        code /= nA_;
    }
    return w;
}

bool FiniteModel::is_zero(const Word& w) const {
    for (auto v : w)
        if (v != 0) return false;
    return true;
}

FiniteModel::Word FiniteModel::add(const Word& a, const Word& b) const {
    Word out(nG_);
    for (std::uint32_t i = 0; i < nG_; ++i) out[i] = radd(a[i], b[i]);
    return out;
}

FiniteModel::Word FiniteModel::neg(const Word& a) const {
    Word out(nG_);
    for (std::uint32_t i = 0; i < nG_; ++i) out[i] = rneg(a[i]);
    return out;
}

FiniteModel::Word FiniteModel::mul(const Word& a, const Word& b) const {
    Word out(nG_, 0);
    for (std::uint32_t s = 0; s < nG_; ++s) {
        if (a[s] == 0) continue;
        for (std::uint32_t t = 0; t < nG_; ++t) {
            if (b[t] == 0) continue;
            std::uint32_t c = rmul(rmul(a[s], sig(s, b[t])), alph(s, t));
            std::uint32_t st = gmul(s, t);
            out[st] = radd(out[st], c);
        }
    }
    return out;
}

FiniteModel::Word FiniteModel::mul_single_left(std::uint32_t a, std::uint32_t g, const Word& w) const {
    Word out(nG_, 0);
    for (std::uint32_t t = 0; t < nG_; ++t) {
        if (w[t] == 0) continue;
        std::uint32_t c = rmul(rmul(a, sig(g, w[t])), alph(g, t));
        std::uint32_t gt = gmul(g, t);
        out[gt] = radd(out[gt], c);
    }
    return out;
}

FiniteModel::Word FiniteModel::mul_single_right(const Word& w, std::uint32_t a, std::uint32_t g) const {
    Word out(nG_, 0);
    for (std::uint32_t s = 0; s < nG_; ++s) {
        if (w[s] == 0) continue;
        std::uint32_t c = rmul(rmul(w[s], sig(s, a)), alph(s, g));
        std::uint32_t sg = gmul(s, g);
        out[sg] = radd(out[sg], c);
    }
    return out;
}

CrossedElem FiniteModel::to_elem(const Word& w) const {
    CrossedElem u(sys_);
    const Ring::Ptr& A = sys_->ring();
    const Group::Ptr& G = sys_->group();
    for (std::uint32_t i = 0; i < nG_; ++i) {
        if (w[i] == 0) continue;
        u = u + CrossedElem::single(sys_, G->at(i), A->element_at(w[i]));
    }
    return u;
}

FiniteModel::Word FiniteModel::from_elem(const CrossedElem& u) const {
    Word w(nG_, 0);
    for (const auto& [g, c] : u.coeffs())
        w[sys_->group()->index_of(g)] = static_cast<std::uint32_t>(sys_->ring()->index_of(c));
    return w;
}

std::vector<std::uint64_t> FiniteModel::brute_center() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < total_; ++code) {
        Word w = decode(code);
        bool central = true;
        for (std::uint32_t g = 0; g < nG_ && central; ++g)
            for (std::uint32_t a = 0; a < nA_ && central; ++a)
                central = mul_single_left(a, g, w) == mul_single_right(w, a, g);
        if (central) out.push_back(code);
    }
    return out;
}

std::vector<std::uint64_t> FiniteModel::brute_commutant() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < total_; ++code) {
        Word w = decode(code);
        bool commuting = true;
        for (std::uint32_t a = 0; a < nA_ && commuting; ++a)
            commuting = mul_single_left(a, 0, w) == mul_single_right(w, a, 0);
        if (commuting) out.push_back(code);
    }
    return out;
}

std::vector<std::vector<char>> FiniteModel::commutant_degree_masks() const {
    std::vector<std::vector<char>> in_R(nG_, std::vector<char>(nA_, 0));
    for (std::uint32_t g = 0; g < nG_; ++g)
        for (std::uint32_t r = 0; r < nA_; ++r) {
            bool ok = true;
            for (std::uint32_t a = 0; a < nA_ && ok; ++a)
                ok = rmul(r, sig(g, a)) == rmul(a, r);
            in_R[g][r] = ok ? 1 : 0;
        }
    return in_R;
}

} // namespace crossed_forge
