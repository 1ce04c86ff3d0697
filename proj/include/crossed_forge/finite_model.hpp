#ifndef CROSSED_FORGE_FINITE_MODEL_HPP
#define CROSSED_FORGE_FINITE_MODEL_HPP

#include "crossed_forge/crossed_elem.hpp"

#include <cstdint>
#include <vector>

namespace crossed_forge {

/// Table-driven model of a finite crossed product, used by the brute-force
/// oracles and the ideal machinery.  Elements are coefficient words (one
/// ring-element index per group slot) with a mixed-radix code for O(1) set
/// membership.  Construction is guarded by the product-space limit.
class FiniteModel {
public:
    using Word = std::vector<std::uint32_t>;

    explicit FiniteModel(CrossedSystem::Ptr sys, const char* context = "finite model");

    const CrossedSystem::Ptr& system() const { return sys_; }
    std::uint32_t ring_size() const { return nA_; }
    std::uint32_t group_order() const { return nG_; }
    std::uint64_t total() const { return total_; }

    std::uint64_t encode(const Word& w) const;
    Word decode(std::uint64_t code) const;
    Word zero_word() const { return Word(nG_, 0); }
    bool is_zero(const Word& w) const;

    // ring/group tables
    std::uint32_t radd(std::uint32_t a, std::uint32_t b) const { return radd_[a * nA_ + b]; }
    std::uint32_t rmul(std::uint32_t a, std::uint32_t b) const { return rmul_[a * nA_ + b]; }
    std::uint32_t rneg(std::uint32_t a) const { return rneg_[a]; }
    std::uint32_t sig(std::uint32_t g, std::uint32_t a) const { return sig_[g][a]; }
    std::uint32_t alph(std::uint32_t s, std::uint32_t t) const { return alpha_[s * nG_ + t]; }
    std::uint32_t gmul(std::uint32_t s, std::uint32_t t) const { return gmul_[s * nG_ + t]; }
    std::uint32_t ginv(std::uint32_t s) const { return ginv_[s]; }

    Word add(const Word& a, const Word& b) const;
    Word neg(const Word& a) const;
    Word mul(const Word& a, const Word& b) const;
    Word mul_single_left(std::uint32_t a, std::uint32_t g, const Word& w) const;  // (a[g]) * w
    Word mul_single_right(const Word& w, std::uint32_t a, std::uint32_t g) const; // w * (a[g])

    CrossedElem to_elem(const Word& w) const;
    Word from_elem(const CrossedElem& u) const;

    /// Ring indices of an additive generating set of (A,+).
    const std::vector<std::uint32_t>& additive_generator_indices() const { return addgens_; }
    /// Ring index of 1.
    std::uint32_t one_index() const { return one_idx_; }

    /// Brute-force center: every element commuting with all a*[g]
    /// (sufficient by biadditivity of the product).  Sorted codes.
    std::vector<std::uint64_t> brute_center() const;
    /// Brute-force commutant of the embedded base: every element commuting
    /// with all a*[e].  Sorted codes.
    std::vector<std::uint64_t> brute_commutant() const;
    /// Per-degree membership table straight from the defining relation:
    /// in_R[g][r] iff r sigma_g(a) = a r for every a.
    std::vector<std::vector<char>> commutant_degree_masks() const;

private:
    CrossedSystem::Ptr sys_;
    std::uint32_t nA_ = 0, nG_ = 0;
    std::uint64_t total_ = 0;
    std::vector<std::uint32_t> radd_, rmul_, rneg_;
    std::vector<std::vector<std::uint32_t>> sig_;
    std::vector<std::uint32_t> alpha_, gmul_, ginv_;
    std::vector<std::uint32_t> addgens_;
    std::uint32_t one_idx_ = 0;
};

} // namespace crossed_forge

#endif
