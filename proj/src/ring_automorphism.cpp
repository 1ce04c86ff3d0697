#include "crossed_forge/ring_automorphism.hpp"

#include "crossed_forge/guards.hpp"

#include <algorithm>
#include <set>

namespace crossed_forge {

namespace {

// Evaluates a payload, interpreted by `shape` (the ring whose element it is),
// inside `target` with the given generator images.  For direct automorphisms
// shape == target; for quotient rings shape is the parent and target the
// quotient, which is what makes descended maps reusable.
RingElem evaluate_at(const Ring& shape, const RingElem::Payload& payload,
                     const Ring::Ptr& target, const std::vector<RingElem>& images) {
    switch (shape.kind()) {
    case RingKind::modular:
        return target->from_int(std::get<std::int64_t>(payload));
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        const auto& v = std::get<std::vector<std::int64_t>>(payload);
        if (images.empty()) // degree-1 modulus, the ring is just F_p
            return target->from_int(v.empty() ? 0 : v[0]);
        RingElem acc = target->zero();
        for (std::size_t i = v.size(); i-- > 0;)
            acc = acc * images[0] + target->from_int(v[i]);
        return acc;
    }
    case RingKind::truncated_multivar: {
        const auto& v = std::get<std::vector<std::int64_t>>(payload);
        const auto& basis = shape.monomial_basis();
        RingElem acc = target->zero();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            RingElem term = target->from_int(v[i]);
            for (int var = 0; var < shape.nvars(); ++var)
                for (int e = 0; e < basis[i][static_cast<std::size_t>(var)]; ++e)
                    term = term * images[static_cast<std::size_t>(var)];
            acc = acc + term;
        }
        return acc;
    }
    case RingKind::function_ring: {
        const auto& v = std::get<std::vector<std::int64_t>>(payload);
        RingElem acc = target->zero();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            acc = acc + target->from_int(v[i]) * images[i];
        }
        return acc;
    }
    case RingKind::laurent_rational: {
        const auto& m = std::get<Ring::LaurentPoly>(payload);
        const auto& img = std::get<Ring::LaurentPoly>(images.at(0).payload());
        Rational c = img.begin()->second;
        std::int64_t k = img.begin()->first;
        Ring::LaurentPoly out;
        for (const auto& [e, coeff] : m) {
            // k is +-1, so e -> k*e never collides
            Rational nc = coeff * rational_pow(c, BigInt(e));
            if (nc != 0) out[k * e] = std::move(nc);
        }
        return RingElem(target, std::move(out));
    }
    case RingKind::quotient_ring:
        throw Error("evaluate_at: nested quotient payloads are not used");
    }
    throw Error("unreachable");
}

} // namespace

RingAutomorphism RingAutomorphism::identity(Ring::Ptr ring) {
    auto gens = ring->ring_generators();
    return RingAutomorphism(std::move(ring), std::move(gens));
}

RingAutomorphism RingAutomorphism::from_generator_images(Ring::Ptr ring,
                                                         std::vector<RingElem> images) {
    RingAutomorphism phi(std::move(ring), std::move(images));
    phi.validate();
    return phi;
}

RingAutomorphism RingAutomorphism::frobenius(const Ring::Ptr& field) {
    if (field->kind() != RingKind::finite_field)
        throw UnsupportedError("frobenius: not a finite field");
    auto gens = field->ring_generators();
    if (gens.empty()) return identity(field); // prime field
    RingElem x = gens[0];
    RingElem img = field->one();
    for (std::int64_t i = 0; i < field->characteristic_p(); ++i) img = img * x;
    return from_generator_images(field, {img});
}

RingAutomorphism RingAutomorphism::laurent_scale(const Rational& q) {
    if (q == 0) throw PreconditionError("laurent_scale: q must be nonzero");
    auto ring = Ring::laurent_rational();
    Ring::LaurentPoly img;
    img[1] = q;
    return from_generator_images(ring, {RingElem(ring, std::move(img))});
}

RingAutomorphism RingAutomorphism::from_point_bijection(Ring::Ptr fn_ring,
                                                        const std::vector<int>& pi) {
    if (fn_ring->kind() != RingKind::function_ring)
        throw UnsupportedError("from_point_bijection: not a function ring");
    int n = fn_ring->npoints();
    if (static_cast<int>(pi.size()) != n)
        throw PreconditionError("bijection must cover every point");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : pi) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw PreconditionError("point map is not a bijection");
        hit[static_cast<std::size_t>(v)] = true;
    }
    // (f o pi^{-1})(x) = f(pi^{-1}(x)); indicator of point i maps to indicator of pi(i)
    std::vector<RingElem> images;
    auto gens = fn_ring->ring_generators();
    for (int i = 0; i < n; ++i)
        images.push_back(gens[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])]);
    return from_generator_images(std::move(fn_ring), std::move(images));
}

RingAutomorphism RingAutomorphism::from_variable_permutation(Ring::Ptr ring,
                                                             const std::vector<int>& perm) {
    if (ring->kind() != RingKind::truncated_multivar)
        throw UnsupportedError("from_variable_permutation: not a truncated multivariate ring");
    auto gens = ring->ring_generators();
    if (perm.size() != gens.size())
        throw PreconditionError("variable permutation has the wrong length");
    std::vector<RingElem> images;
    for (std::size_t i = 0; i < perm.size(); ++i)
        images.push_back(gens.at(static_cast<std::size_t>(perm[i])));
    return from_generator_images(std::move(ring), std::move(images));
}

void RingAutomorphism::validate() const {
    auto gens = ring_->ring_generators();
    if (images_.size() != gens.size())
        throw PreconditionError("automorphism needs exactly " + std::to_string(gens.size()) +
                                " generator images for " + ring_->describe());
    for (const auto& img : images_)
        if (!img.ring().same_as(*ring_)) throw DomainMismatchError("generator image from a foreign ring");

    switch (ring_->kind()) {
    case RingKind::modular:
        return; // only the identity exists, nothing to check
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        if (images_.empty()) return;
        // the modulus relation must map to zero
        const auto& mod = ring_->poly_modulus();
        RingElem acc = ring_->zero();
        for (std::size_t i = mod.size(); i-- > 0;)
            acc = acc * images_[0] + ring_->from_int(mod[i]);
        if (!acc.is_zero())
            throw PreconditionError("generator image violates the quotient relation of " +
                                    ring_->describe());
        break;
    }
    case RingKind::truncated_multivar: {
        if (ring_->truncation() == TruncationKind::total_degree) {
            for (const auto& img : images_) {
                const auto& v = std::get<std::vector<std::int64_t>>(img.payload());
                if (v[0] != 0)
                    throw PreconditionError("variable image has a constant term; "
                                            "the truncation relation would break");
            }
        } else {
            for (const auto& img : images_) {
                RingElem pw = ring_->one();
                for (int e = 0; e < ring_->truncation_bound(); ++e) pw = pw * img;
                if (!pw.is_zero())
                    throw PreconditionError("variable image violates the power truncation");
            }
        }
        break;
    }
    case RingKind::function_ring: {
        // images must be an orthogonal partition of unity by idempotents
        RingElem sum = ring_->zero();
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (!(images_[i] * images_[i] == images_[i]))
                throw PreconditionError("indicator image is not idempotent");
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (!(images_[i] * images_[j]).is_zero())
                    throw PreconditionError("indicator images are not orthogonal");
            sum = sum + images_[i];
        }
        if (!sum.is_one()) throw PreconditionError("indicator images do not sum to 1");
        break;
    }
    case RingKind::laurent_rational: {
        const auto& m = std::get<Ring::LaurentPoly>(images_.at(0).payload());
        if (m.size() != 1 || (m.begin()->first != 1 && m.begin()->first != -1))
            throw PreconditionError("Laurent automorphisms must send x to c*x or c*x^-1");
        break;
    }
    case RingKind::quotient_ring:
        break; // handled by the generic scan below
    }

    if (ring_->is_finite()) {
        guards::check_ring_enum(ring_->size(), "automorphism validation");
        std::uint64_t n = ring_->size();
        std::vector<bool> seen(n, false);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t img = ring_->index_of(apply(ring_->element_at(i)));
            if (seen[img]) throw PreconditionError("generator images do not give a bijection");
            seen[img] = true;
        }
        if (ring_->kind() == RingKind::quotient_ring) {
            // quotients have no syntactic relation check; verify the hom laws directly
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < n; ++j) {
                    RingElem a = ring_->element_at(i), b = ring_->element_at(j);
                    if (!(apply(a + b) == apply(a) + apply(b)) ||
                        !(apply(a * b) == apply(a) * apply(b)))
                        throw PreconditionError("images do not define a ring homomorphism");
                }
        }
    }
}

RingElem RingAutomorphism::apply(const RingElem& a) const {
    if (!a.ring().same_as(*ring_))
        throw DomainMismatchError("automorphism applied to a foreign element");
    if (ring_->kind() == RingKind::quotient_ring) {
        RingElem rep = ring_->lift(a);
        return evaluate_at(*ring_->parent(), rep.payload(), ring_, images_);
    }
    return evaluate_at(*ring_, a.payload(), ring_, images_);
}

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& inner) const {
    if (!ring_->same_as(*inner.ring_))
        throw DomainMismatchError("composing automorphisms of different rings");
    std::vector<RingElem> images;
    images.reserve(inner.images_.size());
    for (const auto& img : inner.images_) images.push_back(apply(img));
    return RingAutomorphism(ring_, std::move(images)); // composition of valid maps is valid
}

bool RingAutomorphism::is_identity() const {
    return images_ == ring_->ring_generators();
}

std::int64_t RingAutomorphism::order() const {
    if (ring_->kind() == RingKind::laurent_rational) {
        const auto& m = std::get<Ring::LaurentPoly>(images_.at(0).payload());
        if (m.begin()->first == -1) return 2;
        return rational_mult_order(m.begin()->second);
    }
    RingAutomorphism acc = *this;
    for (std::int64_t k = 1; k <= 1000000; ++k) {
        if (acc.is_identity()) return k;
        acc = compose(acc);
    }
    return 0;
}

RingAutomorphism RingAutomorphism::inverse() const {
    if (ring_->kind() == RingKind::laurent_rational) {
        const auto& m = std::get<Ring::LaurentPoly>(images_.at(0).payload());
        if (m.begin()->first == -1) return *this; // an involution
        Ring::LaurentPoly img;
        img[1] = Rational(1) / m.begin()->second;
        return RingAutomorphism(ring_, {RingElem(ring_, std::move(img))});
    }
    std::int64_t o = order();
    if (o <= 0) throw Error("automorphism order not found");
    return power(BigInt(o - 1));
}

RingAutomorphism RingAutomorphism::power(const BigInt& n) const {
    if (ring_->kind() == RingKind::laurent_rational) {
        const auto& m = std::get<Ring::LaurentPoly>(images_.at(0).payload());
        if (m.begin()->first == -1)
            return n % 2 == 0 ? identity(ring_) : *this;
        Ring::LaurentPoly img;
        img[1] = rational_pow(m.begin()->second, n);
        return RingAutomorphism(ring_, {RingElem(ring_, std::move(img))});
    }
    std::int64_t o = order();
    if (o <= 0) throw Error("automorphism order not found");
    BigInt r = n % o;
    if (r < 0) r += o;
    std::int64_t k = r.convert_to<std::int64_t>();
    RingAutomorphism acc = identity(ring_);
    for (std::int64_t i = 0; i < k; ++i) acc = compose(acc);
    return acc;
}

std::string RingAutomorphism::describe() const {
    if (is_identity()) return "id";
    auto gens = ring_->ring_generators();
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (images_[i] == gens[i]) continue;
        if (!out.empty()) out += ", ";
        out += gens[i].to_text() + " -> " + images_[i].to_text();
    }
    return out.empty() ? "id" : out;
}

bool operator==(const RingAutomorphism& a, const RingAutomorphism& b) {
    return a.ring_->same_as(*b.ring_) && a.images_ == b.images_;
}

} // namespace crossed_forge
