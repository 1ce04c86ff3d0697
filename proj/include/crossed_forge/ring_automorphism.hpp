#ifndef CROSSED_FORGE_RING_AUTOMORPHISM_HPP
#define CROSSED_FORGE_RING_AUTOMORPHISM_HPP

#include "crossed_forge/ring.hpp"

#include <string>
#include <vector>

namespace crossed_forge {

/// A unital ring automorphism, stored by the images of the ring's canonical
/// generators.  Well-definedness (the images respect the ring's relations)
/// and bijectivity are verified once at construction; applying the map is a
/// pure evaluation afterwards.  Fixes 0 and 1 by construction.
class RingAutomorphism {
public:
    static RingAutomorphism identity(Ring::Ptr ring);
    static RingAutomorphism from_generator_images(Ring::Ptr ring, std::vector<RingElem> images);
    /// a -> a^p on a finite field.
    static RingAutomorphism frobenius(const Ring::Ptr& field);
    /// x -> q*x on the rational Laurent ring (q != 0).
    static RingAutomorphism laurent_scale(const Rational& q);
    /// Function ring: f -> f o pi^{-1} for a bijection pi of the point set
    /// (pi given by its images, pi[i] = image of point i).
    static RingAutomorphism from_point_bijection(Ring::Ptr fn_ring, const std::vector<int>& pi);
    /// Truncated multivariate ring: x_i -> x_{perm[i]} (0-based).
    static RingAutomorphism from_variable_permutation(Ring::Ptr ring, const std::vector<int>& perm);

    const Ring::Ptr& ring() const { return ring_; }
    const std::vector<RingElem>& generator_images() const { return images_; }

    RingElem apply(const RingElem& a) const;
    RingAutomorphism compose(const RingAutomorphism& inner) const; // (*this) after inner
    RingAutomorphism inverse() const;
    RingAutomorphism power(const BigInt& n) const;
    bool is_identity() const;
    /// Smallest k >= 1 with phi^k = id; 0 when there is none (infinite order).
    std::int64_t order() const;

    std::string describe() const;

    friend bool operator==(const RingAutomorphism& a, const RingAutomorphism& b);
    friend bool operator!=(const RingAutomorphism& a, const RingAutomorphism& b) { return !(a == b); }

private:
    RingAutomorphism(Ring::Ptr ring, std::vector<RingElem> images)
        : ring_(std::move(ring)), images_(std::move(images)) {}

    void validate() const;

    Ring::Ptr ring_;
    std::vector<RingElem> images_; // one per Ring::ring_generators() entry
};

} // namespace crossed_forge

#endif
