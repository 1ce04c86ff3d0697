#include "crossed_forge/catalog.hpp"

#include "crossed_forge/structure.hpp"

#include <numeric>

namespace crossed_forge {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t acc = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
    }
    return acc;
}

std::int64_t mult_order_mod(std::int64_t q, std::int64_t p) {
    std::int64_t acc = q % p, ord = 1;
    while (acc != 1) {
        acc = acc * q % p;
        if (++ord > p) throw PreconditionError("q is not a unit mod p");
    }
    return ord;
}

void fill_flags(CatalogEntry& e) {
    e.commutative = is_commutative(e.system).value;
    try {
        e.maximal_commutative = is_maximal_commutative(e.system).value;
    } catch (const UnsupportedError&) {
        e.maximal_commutative.reset();
    }
}

void expect_flag(const std::optional<bool>& flag, bool expected, const std::string& what) {
    if (!flag || *flag != expected)
        throw Error("catalog annotation check failed: " + what);
}

} // namespace

CatalogEntry make_truncated_quantum_torus(std::int64_t p, std::int64_t q, int m, std::int64_t k) {
    if (m < 2) throw PreconditionError("truncated_quantum_torus: m >= 2 required");
    if (k < 2) throw PreconditionError("truncated_quantum_torus: the group must not be trivial "
                                       "(k >= 2)");
    if (q % p == 0) throw PreconditionError("truncated_quantum_torus: q must be a unit mod p");
    if (mod_pow(q, k, p) != 1)
        throw PreconditionError("truncated_quantum_torus: q^k != 1 mod p, the action does not "
                                "factor through C" + std::to_string(k));

    std::vector<std::int64_t> modulus(static_cast<std::size_t>(m) + 1, 0);
    modulus.back() = 1; // x^m
    Ring::Ptr A = Ring::poly_quotient(p, std::move(modulus));
    Group::Ptr G = Group::cyclic(k);
    RingElem x_image = A->parse(std::to_string(q % p) + "x");
    RingAutomorphism scale = RingAutomorphism::from_generator_images(A, {x_image});

    CatalogEntry e;
    e.constructor_id = "truncated_quantum_torus";
    e.name = "truncated_quantum_torus(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
             ",m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
    e.system = CrossedSystem::cyclic_action(A, G, scale);
    fill_flags(e);
    expect_flag(e.maximal_commutative, false, e.name + " must not be maximal commutative");

    for (int j = 1; j < m; ++j) e.ideal_chain_exponents.push_back(j);
    std::int64_t ord = mult_order_mod(q, p);
    if (ord < m) {
        e.obstruction_c = (ord == 1 ? std::string("x") : "x^" + std::to_string(ord));
        int dpow = m - static_cast<int>(ord);
        e.obstruction_d = (dpow == 1 ? std::string("x") : "x^" + std::to_string(dpow));
        e.notes.push_back("a fixed zero-divisor exists; the quotient construction applies");
    } else {
        e.notes.push_back("ord(q) >= m: no fixed zero-divisor of the required shape; "
                          "the quotient construction does not apply");
    }
    e.notes.push_back("finite model: F_p replaces the complex coefficients, C_k replaces Z");
    return e;
}

CatalogEntry make_truncated_quantum_torus_z(std::int64_t p, std::int64_t q, int m) {
    if (m < 2) throw PreconditionError("truncated_quantum_torus_z: m >= 2 required");
    if (q % p == 0) throw PreconditionError("truncated_quantum_torus_z: q must be a unit mod p");
    std::vector<std::int64_t> modulus(static_cast<std::size_t>(m) + 1, 0);
    modulus.back() = 1;
    Ring::Ptr A = Ring::poly_quotient(p, std::move(modulus));
    RingElem x_image = A->parse(std::to_string(((q % p) + p) % p) + "x");
    RingAutomorphism scale = RingAutomorphism::from_generator_images(A, {x_image});

    CatalogEntry e;
    e.constructor_id = "truncated_quantum_torus_z";
    e.name = "truncated_quantum_torus_z(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
             ",m=" + std::to_string(m) + ")";
    e.system = CrossedSystem::cyclic_action(A, Group::integers(), scale);
    e.commutative = is_commutative(e.system).value;
    e.maximal_commutative.reset(); // not decidable here: infinite group, base not a domain
    e.notes.push_back("integers-group variant; membership-level checks only");
    return e;
}

CatalogEntry make_rational_quantum_torus(const Rational& q) {
    if (q == 0 || q == 1)
        throw PreconditionError("rational_quantum_torus: q must avoid {0, 1}");
    Ring::Ptr A = Ring::laurent_rational();
    RingAutomorphism scale = RingAutomorphism::laurent_scale(q);

    CatalogEntry e;
    e.constructor_id = "rational_quantum_torus";
    e.name = "rational_quantum_torus(q=" + rational_to_text(q) + ")";
    e.system = CrossedSystem::cyclic_action(A, Group::integers(), scale);
    fill_flags(e);
    e.kernel_modulus = *sigma_kernel(e.system).modulus;
    bool root_of_unity = q == -1; // the only root of unity in Q besides the excluded 1
    expect_flag(e.maximal_commutative, !root_of_unity,
                e.name + ": maximal commutativity must match the root-of-unity dichotomy");
    e.notes.push_back("rational coefficients replace the complex ones");
    return e;
}

CatalogEntry make_symmetric_action(std::int64_t p, int n, TruncationKind trunc, int bound) {
    if (n != 2 && n != 3) throw PreconditionError("symmetric_action: n must be 2 or 3");
    if (bound < 2)
        throw PreconditionError("symmetric_action: truncation bound >= 2, the variables must "
                                "survive for the action to stay faithful");
    Ring::Ptr A = Ring::truncated_multivar(p, n, trunc, bound);
    Group::Ptr G = Group::symmetric(n);

    std::vector<RingAutomorphism> sigma;
    for (std::uint64_t i = 0; i < G->order(); ++i)
        sigma.push_back(RingAutomorphism::from_variable_permutation(A, G->one_line(G->at(i))));
    // faithfulness of the quotient action
    for (std::uint64_t i = 0; i < G->order(); ++i)
        for (std::uint64_t j = i + 1; j < G->order(); ++j)
            if (sigma[i] == sigma[j])
                throw PreconditionError("symmetric_action: the truncation collapses two "
                                        "permutations; the action is not faithful");

    CatalogEntry e;
    e.constructor_id = "symmetric_action";
    e.name = "symmetric_action(p=" + std::to_string(p) + ",n=" + std::to_string(n) +
             (trunc == TruncationKind::total_degree ? ",deg<" : ",pow<") + std::to_string(bound) +
             ")";
    e.system = CrossedSystem::action_only(A, G, std::move(sigma));
    fill_flags(e);
    e.notes.push_back("the truncated quotient is not a domain; maximality is computed, "
                      "not inherited from the polynomial-ring case");
    return e;
}

CatalogEntry make_function_dynamics(std::int64_t p, const std::vector<int>& pi) {
    if (pi.size() > 8) throw PreconditionError("function_dynamics: at most 8 points");
    Ring::Ptr A = Ring::function_ring(p, static_cast<int>(pi.size()));
    RingAutomorphism gen = RingAutomorphism::from_point_bijection(A, pi);

    // order of the bijection
    std::vector<int> identity(pi.size());
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> acc = identity;
    std::int64_t ord = 0;
    do {
        for (auto& v : acc) v = pi[static_cast<std::size_t>(v)];
        ++ord;
    } while (acc != identity);

    std::int64_t k = std::max<std::int64_t>(ord, 2); // the trivial group says nothing here
    CatalogEntry e;
    e.constructor_id = "function_dynamics";
    e.name = "function_dynamics(p=" + std::to_string(p) + ",pi=[";
    for (std::size_t i = 0; i < pi.size(); ++i) e.name += (i ? "," : "") + std::to_string(pi[i]);
    e.name += "])";
    e.system = CrossedSystem::cyclic_action(A, Group::cyclic(k), gen);
    fill_flags(e);

    // Sep^n(X) = {x | pi^n(x) != x}
    std::vector<int> power(pi.size());
    std::iota(power.begin(), power.end(), 0);
    for (std::int64_t nstep = 1; nstep < k; ++nstep) {
        for (std::size_t i = 0; i < power.size(); ++i)
            power[i] = pi[static_cast<std::size_t>(power[i])];
        std::vector<int> sep;
        for (std::size_t i = 0; i < power.size(); ++i)
            if (power[i] != static_cast<int>(i)) sep.push_back(static_cast<int>(i));
        e.separation_sets.push_back(std::move(sep));
    }
    // the separation criterion: maximal iff every nonzero power moves every point
    bool every_power_moves_everything = true;
    for (const auto& sep : e.separation_sets)
        if (sep.size() != pi.size()) every_power_moves_everything = false;
    expect_flag(e.maximal_commutative, every_power_moves_everything,
                e.name + ": maximality must match the separation criterion");
    return e;
}

CatalogEntry make_group_ring(Ring::Ptr ring, Group::Ptr group) {
    CatalogEntry e;
    e.constructor_id = "group_ring";
    e.name = "group_ring(" + ring->describe() + ", " + group->describe() + ")";
    e.system = CrossedSystem::group_ring(std::move(ring), std::move(group));
    fill_flags(e);
    if (e.system->group()->is_finite() && e.system->group()->order() > 1 &&
        e.system->ring()->is_commutative())
        expect_flag(e.maximal_commutative, false,
                    e.name + ": a trivial action can never leave the base maximal commutative");
    return e;
}

CatalogEntry make_twisted_group_ring(Ring::Ptr ring, Group::Ptr group,
                                     std::vector<RingElem> alpha) {
    CatalogEntry e;
    e.constructor_id = "twisted_group_ring";
    e.name = "twisted_group_ring(" + ring->describe() + ", " + group->describe() + ")";
    e.system = CrossedSystem::twisted_group_ring(std::move(ring), std::move(group), std::move(alpha));
    fill_flags(e);
    if (e.system->group()->is_finite() && e.system->group()->order() > 1 &&
        e.system->ring()->is_commutative())
        expect_flag(e.maximal_commutative, false,
                    e.name + ": a trivial action can never leave the base maximal commutative");
    return e;
}

CatalogEntry make_galois_field_action(std::int64_t p, int degree) {
    if (degree < 2) throw PreconditionError("galois_field_action: degree >= 2 (the group must "
                                            "not be trivial)");
    Ring::Ptr F = Ring::finite_field(p, degree);
    RingAutomorphism frob = RingAutomorphism::frobenius(F);

    CatalogEntry e;
    e.constructor_id = "galois_field_action";
    e.name = "galois_field_action(p=" + std::to_string(p) + ",degree=" + std::to_string(degree) + ")";
    e.system = CrossedSystem::cyclic_action(F, Group::cyclic(degree), frob);
    fill_flags(e);
    expect_flag(e.maximal_commutative, true,
                e.name + ": a field with a faithful Galois action must be maximal commutative");
    return e;
}

std::vector<CatalogConstructorDoc> catalog_constructors() {
    return {
        {"truncated_quantum_torus", "p, q, m, k",
         "F_p[x]/(x^m) x| C_k, x -> q^n x; finite truncated-quantum-torus model"},
        {"truncated_quantum_torus_z", "p, q, m",
         "the same coefficient ring over the integers group; membership checks only"},
        {"rational_quantum_torus", "q",
         "Q[x,x^-1] x| Z, x -> q^n x; maximal commutativity follows the root-of-unity dichotomy"},
        {"symmetric_action", "p, n, truncation, bound",
         "truncated F_p[x_1..x_n] x| S_n by permuting variables"},
        {"function_dynamics", "p, pi",
         "functions on a finite set twisted by a bijection; separation-set analysis"},
        {"group_ring", "ring, group", "trivial action, trivial cocycle"},
        {"twisted_group_ring", "ring, group, alpha", "trivial action, explicit cocycle"},
        {"galois_field_action", "p, degree", "F_{p^degree} x| C_degree by the p-power map"},
    };
}

std::vector<CatalogEntry> standard_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(make_truncated_quantum_torus(3, 2, 3, 2));
    out.push_back(make_truncated_quantum_torus(5, 2, 3, 4));
    out.push_back(make_truncated_quantum_torus(3, 2, 3, 4));
    out.push_back(make_truncated_quantum_torus_z(3, 2, 3));
    out.push_back(make_rational_quantum_torus(Rational(2)));
    out.push_back(make_rational_quantum_torus(Rational(-1)));
    out.push_back(make_symmetric_action(3, 2, TruncationKind::total_degree, 2));
    out.push_back(make_function_dynamics(2, {1, 2, 0}));
    out.push_back(make_function_dynamics(2, {1, 0, 2}));
    out.push_back(make_group_ring(Ring::modular(4), Group::cyclic(2)));
    out.push_back(make_group_ring(Ring::modular(3), Group::symmetric(3)));
    {
        Ring::Ptr z5 = Ring::modular(5);
        Group::Ptr c2 = Group::cyclic(2);
        std::vector<RingElem> alpha{z5->one(), z5->one(), z5->one(), z5->from_int(2)};
        out.push_back(make_twisted_group_ring(z5, c2, std::move(alpha)));
    }
    out.push_back(make_galois_field_action(2, 2));
    return out;
}

} // namespace crossed_forge
