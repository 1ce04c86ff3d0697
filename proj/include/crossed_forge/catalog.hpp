#ifndef CROSSED_FORGE_CATALOG_HPP
#define CROSSED_FORGE_CATALOG_HPP

#include "crossed_forge/crossed_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crossed_forge {

/// A named, parameterized example system together with its verified
/// annotations.  Every flag is computed through the structural criteria at
/// construction time and re-derived by brute force in the test suite.
struct CatalogEntry {
    std::string name;           // constructor(params)
    std::string constructor_id;
    CrossedSystem::Ptr system;

    std::optional<bool> commutative;
    std::optional<bool> maximal_commutative; // empty when undecidable here
    std::vector<std::string> notes;

    // truncated quantum torus: the strictly decreasing chain of lifted ideals
    std::vector<int> ideal_chain_exponents;
    // zero-divisor obstruction data (literals), when the construction applies
    std::optional<std::string> obstruction_c, obstruction_d;

    // function dynamics: Sep^n(X) = {x | pi^n(x) != x} for n = 1..k-1
    std::vector<std::vector<int>> separation_sets;

    // rational torus: the expected action kernel modulus
    std::optional<BigInt> kernel_modulus;
};

/// F_p[x]/(x^m) x| C_k with x -> q^n x and trivial cocycle; the finite model
/// of the truncated quantum torus (q^k = 1 mod p required).
CatalogEntry make_truncated_quantum_torus(std::int64_t p, std::int64_t q, int m, std::int64_t k);
/// The integers-group variant of the same coefficient ring; membership-level
/// checks only.
CatalogEntry make_truncated_quantum_torus_z(std::int64_t p, std::int64_t q, int m);
/// Q[x,x^-1] x| Z with x -> q^n x; maximal commutativity follows the
/// root-of-unity dichotomy for q.
CatalogEntry make_rational_quantum_torus(const Rational& q);
/// F_p[x_1..x_n]/(truncation) x| S_n by permuting variables.
CatalogEntry make_symmetric_action(std::int64_t p, int n, TruncationKind trunc, int bound);
/// Functions X -> F_p twisted by a bijection pi of X (one-line, 0-based);
/// the group is cyclic of order max(ord(pi), 2).
CatalogEntry make_function_dynamics(std::int64_t p, const std::vector<int>& pi);
CatalogEntry make_group_ring(Ring::Ptr ring, Group::Ptr group);
CatalogEntry make_twisted_group_ring(Ring::Ptr ring, Group::Ptr group, std::vector<RingElem> alpha);
/// F_{p^degree} x| C_degree through the p-power map.
CatalogEntry make_galois_field_action(std::int64_t p, int degree);

struct CatalogConstructorDoc {
    std::string id;
    std::string params;
    std::string summary;
};
std::vector<CatalogConstructorDoc> catalog_constructors();

/// The desk-scale instances the test- and acceptance suites run on.
std::vector<CatalogEntry> standard_entries();

} // namespace crossed_forge

#endif
