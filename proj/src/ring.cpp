#include "crossed_forge/ring.hpp"

#include "crossed_forge/guards.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace crossed_forge {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > (1ULL << 62) / (base ? base : 1))
            throw PreconditionError(std::string(what) + ": element count overflows");
        r *= base;
    }
    return r;
}

// --- univariate polynomial helpers over F_p (little-endian coefficient vectors) ---

using Poly = std::vector<std::int64_t>;

Poly poly_strip(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; } // -1 for zero

Poly poly_mul_raw(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_reduce(out[i + j] + a[i] * b[j], p);
    }
    return poly_strip(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t x = i < a.size() ? a[i] : 0;
        std::int64_t y = i < b.size() ? b[i] : 0;
        out[i] = mod_reduce(x - y, p);
    }
    return poly_strip(std::move(out));
}

std::int64_t mod_inverse_i64(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = mod_reduce(a, m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) return -1; // not invertible
    return mod_reduce(t, m);
}

// divides a by monic-or-unit-leading b; returns {quotient, remainder}
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::int64_t p) {
    Poly q;
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    std::int64_t lead_inv = mod_inverse_i64(b.back(), p);
    assert(lead_inv >= 0);
    while (poly_deg(a) >= poly_deg(b)) {
        int shift = poly_deg(a) - poly_deg(b);
        std::int64_t c = mod_reduce(a.back() * lead_inv, p);
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
        q[shift] = mod_reduce(q[shift] + c, p);
        Poly scaled(shift, 0);
        for (auto v : b) scaled.push_back(mod_reduce(v * c, p));
        a = poly_sub(a, scaled, p);
    }
    return {poly_strip(std::move(q)), std::move(a)};
}

// extended gcd: returns {g, u} with u*a == g (mod m); g monic
std::pair<Poly, Poly> poly_half_gcdext(Poly a, Poly m, std::int64_t p) {
    Poly r0 = std::move(m), r1 = poly_strip(std::move(a));
    Poly u0 = {}, u1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1, p);
        Poly u2 = poly_sub(u0, poly_mul_raw(q, u1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
    }
    if (!r0.empty() && r0.back() != 1) {
        std::int64_t inv = mod_inverse_i64(r0.back(), p);
        for (auto& c : r0) c = mod_reduce(c * inv, p);
        for (auto& c : u0) c = mod_reduce(c * inv, p);
    }
    return {std::move(r0), std::move(u0)};
}

bool poly_irreducible(const Poly& f, std::int64_t p) {
    int m = poly_deg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    // trial division by all monic polynomials of degree 1..m/2
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<std::int64_t>(c % p); c /= p; }
            g[d] = 1;
            auto [q, r] = poly_divmod(f, g, p);
            (void)q;
            if (r.empty()) return false;
        }
    }
    return true;
}

std::string format_term(std::int64_t coeff, const std::string& mono) {
    if (mono == "1") return std::to_string(coeff);
    if (coeff == 1) return mono;
    return std::to_string(coeff) + mono;
}

std::string format_uni_mono(int degree, const char* var) {
    if (degree == 0) return "1";
    if (degree == 1) return var;
    return std::string(var) + "^" + std::to_string(degree);
}

// splits "a + 2x^-1 - 3" into signed term texts; parens kept intact;
// '+'/'-' directly after '^' or '/' bind to the number that follows
std::vector<std::pair<int, std::string>> split_signed_terms(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    std::string cur;
    int sign = 1, depth = 0;
    char prev_sig = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if ((ch == '+' || ch == '-') && depth == 0 && prev_sig != '^' && prev_sig != '/' &&
            prev_sig != 0 && prev_sig != '+' && prev_sig != '-') {
            out.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '+' ? 1 : -1;
            prev_sig = ch;
            continue;
        }
        if ((ch == '+' || ch == '-') && prev_sig == 0) { // leading sign
            sign = ch == '-' ? -1 : 1;
            prev_sig = ch;
            continue;
        }
        cur += ch;
        prev_sig = ch;
    }
    if (!cur.empty()) out.emplace_back(sign, cur);
    if (out.empty()) throw ParseError("empty element literal");
    return out;
}

} // namespace

// ---------------------------------------------------------------- factories

Ring::Ptr Ring::modular(std::int64_t n) {
    if (n < 2) throw PreconditionError("Z/n needs n >= 2");
    if (n >= (1LL << 31)) throw PreconditionError("Z/n modulus too large (needs n < 2^31)");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::modular;
    r->n_ = n;
    r->integral_domain_ = is_prime_i64(n);
    return r;
}

Ring::Ptr Ring::poly_quotient(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime_i64(p)) throw PreconditionError("polynomial quotient coefficients need a prime p");
    for (auto& c : modulus) c = mod_reduce(c, p);
    modulus = poly_strip(std::move(modulus));
    if (poly_deg(modulus) < 1) throw PreconditionError("quotient modulus must have degree >= 1");
    if (modulus.back() != 1) throw PreconditionError("quotient modulus must be monic");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::poly_quotient;
    r->p_ = p;
    r->modulus_ = std::move(modulus);
    checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(poly_deg(r->modulus_)),
                "poly_quotient");
    r->integral_domain_ = poly_irreducible(r->modulus_, p);
    return r;
}

Ring::Ptr Ring::finite_field(std::int64_t p, int degree) {
    if (!is_prime_i64(p)) throw PreconditionError("finite field needs a prime p");
    if (degree < 1 || degree > 16) throw PreconditionError("finite field degree out of range");
    // first irreducible monic polynomial of the given degree, by code order
    std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p),
                                      static_cast<std::uint64_t>(degree), "finite_field");
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(degree + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < degree; ++i) { f[i] = static_cast<std::int64_t>(c % p); c /= p; }
        f[degree] = 1;
        if (poly_irreducible(f, p)) return finite_field(p, degree, f);
    }
    throw PreconditionError("no irreducible modulus found"); // unreachable
}

Ring::Ptr Ring::finite_field(std::int64_t p, int degree, std::vector<std::int64_t> modulus) {
    auto base = poly_quotient(p, std::move(modulus));
    if (poly_deg(base->modulus_) != degree)
        throw PreconditionError("finite field modulus degree mismatch");
    if (!base->integral_domain_)
        throw PreconditionError("finite field modulus must be irreducible");
    auto r = std::shared_ptr<Ring>(new Ring(*base));
    r->kind_ = RingKind::finite_field;
    return r;
}

Ring::Ptr Ring::laurent_rational() {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::laurent_rational;
    r->integral_domain_ = true;
    return r;
}

Ring::Ptr Ring::truncated_multivar(std::int64_t p, int nvars, TruncationKind trunc, int bound) {
    if (!is_prime_i64(p)) throw PreconditionError("truncated multivariate ring needs a prime p");
    if (nvars < 1 || nvars > 6) throw PreconditionError("nvars out of range [1,6]");
    if (bound < 1 || bound > 8) throw PreconditionError("truncation bound out of range [1,8]");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::truncated_multivar;
    r->p_ = p;
    r->nvars_ = nvars;
    r->trunc_ = trunc;
    r->bound_ = bound;

    std::vector<int> expt(nvars, 0);
    auto within = [&](const std::vector<int>& e) {
        if (trunc == TruncationKind::total_degree)
            return std::accumulate(e.begin(), e.end(), 0) < bound;
        return std::all_of(e.begin(), e.end(), [&](int v) { return v < bound; });
    };
    // enumerate the surviving monomials
    std::vector<std::vector<int>> basis;
    std::vector<int> cur(nvars, 0);
    while (true) {
        if (within(cur)) basis.push_back(cur);
        int i = 0;
        for (; i < nvars; ++i) {
            if (++cur[i] <= bound) break;
            cur[i] = 0;
        }
        if (i == nvars) break;
    }
    auto graded_lex = [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    };
    std::sort(basis.begin(), basis.end(), graded_lex);
    if (basis.size() > 64) throw PreconditionError("truncated multivariate basis too large");
    checked_pow(static_cast<std::uint64_t>(p), basis.size(), "truncated_multivar");
    r->basis_ = basis;
    for (std::size_t i = 0; i < basis.size(); ++i) r->basis_index_[basis[i]] = static_cast<int>(i);
    r->prod_table_.assign(basis.size(), std::vector<int>(basis.size(), -1));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::vector<int> s(nvars);
            for (int v = 0; v < nvars; ++v) s[v] = basis[i][v] + basis[j][v];
            if (within(s)) r->prod_table_[i][j] = r->basis_index_.at(s);
        }
    r->integral_domain_ = basis.size() == 1;
    return r;
}

Ring::Ptr Ring::function_ring(std::int64_t p, int npoints) {
    if (!is_prime_i64(p)) throw PreconditionError("function ring needs a prime p");
    if (npoints < 1 || npoints > 16) throw PreconditionError("function ring point count out of range");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::function_ring;
    r->p_ = p;
    r->npoints_ = npoints;
    checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(npoints), "function_ring");
    r->integral_domain_ = npoints == 1;
    return r;
}

Ring::Ptr Ring::quotient_by_ideal(Ptr parent, const std::vector<RingElem>& ideal_elems) {
    if (!parent || !parent->is_finite())
        throw UnsupportedError("quotient_by_ideal needs a finite parent ring");
    guards::check_ring_enum(parent->size(), "quotient_by_ideal");

    std::set<std::uint64_t> ideal;
    for (const auto& e : ideal_elems) {
        if (!e.ring().same_as(*parent)) throw DomainMismatchError("ideal element from a different ring");
        ideal.insert(parent->index_of(e));
    }
    if (!ideal.count(parent->index_of(parent->zero())))
        throw PreconditionError("ideal must contain 0");
    // verify: additive subgroup absorbing ring multiplication
    std::vector<RingElem> ideal_list;
    for (auto idx : ideal) ideal_list.push_back(parent->element_at(idx));
    for (const auto& a : ideal_list) {
        if (!ideal.count(parent->index_of(-a)))
            throw PreconditionError("ideal not closed under negation");
        for (const auto& b : ideal_list)
            if (!ideal.count(parent->index_of(a + b)))
                throw PreconditionError("ideal not closed under addition");
        for (const auto& g : parent->additive_generators())
            if (!ideal.count(parent->index_of(g * a)))
                throw PreconditionError("ideal not closed under ring multiplication");
    }

    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::quotient_ring;
    r->parent_ = parent;
    std::uint64_t psize = parent->size();
    r->canon_.assign(psize, psize); // psize = unassigned marker
    for (std::uint64_t a = 0; a < psize; ++a) {
        if (r->canon_[a] != psize) continue;
        // ascending scan: the first unassigned element is its coset's minimum
        RingElem ea = parent->element_at(a);
        for (const auto& i : ideal_list) {
            std::uint64_t member = parent->index_of(ea + i);
            r->canon_[member] = a;
        }
        r->reps_.push_back(a);
    }
    // zero-divisor scan decides whether the quotient is a domain
    r->integral_domain_ = true;
    for (std::uint64_t i = 1; i < r->reps_.size() && r->integral_domain_; ++i)
        for (std::uint64_t j = i; j < r->reps_.size(); ++j) {
            RingElem prod = parent->element_at(r->reps_[i]) * parent->element_at(r->reps_[j]);
            if (r->canon_[parent->index_of(prod)] == 0) { r->integral_domain_ = false; break; }
        }
    return r;
}

// ---------------------------------------------------------------- basics

std::uint64_t Ring::size() const {
    switch (kind_) {
    case RingKind::modular: return static_cast<std::uint64_t>(n_);
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        std::uint64_t r = 1;
        for (int i = 0; i < poly_deg(modulus_); ++i) r *= static_cast<std::uint64_t>(p_);
        return r;
    }
    case RingKind::truncated_multivar: {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i) r *= static_cast<std::uint64_t>(p_);
        return r;
    }
    case RingKind::function_ring: {
        std::uint64_t r = 1;
        for (int i = 0; i < npoints_; ++i) r *= static_cast<std::uint64_t>(p_);
        return r;
    }
    case RingKind::quotient_ring: return reps_.size();
    case RingKind::laurent_rational:
        throw UnsupportedError("the rational Laurent ring is infinite");
    }
    throw Error("unreachable");
}

bool Ring::same_as(const Ring& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case RingKind::modular: return n_ == o.n_;
    case RingKind::poly_quotient:
    case RingKind::finite_field: return p_ == o.p_ && modulus_ == o.modulus_;
    case RingKind::laurent_rational: return true;
    case RingKind::truncated_multivar:
        return p_ == o.p_ && nvars_ == o.nvars_ && trunc_ == o.trunc_ && bound_ == o.bound_;
    case RingKind::function_ring: return p_ == o.p_ && npoints_ == o.npoints_;
    case RingKind::quotient_ring:
        return parent_->same_as(*o.parent_) && reps_ == o.reps_ && canon_ == o.canon_;
    }
    return false;
}

std::string Ring::describe() const {
    switch (kind_) {
    case RingKind::modular: return "Z/" + std::to_string(n_);
    case RingKind::poly_quotient: {
        std::string mod;
        bool first = true;
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (modulus_[i] == 0) continue;
            if (!first) mod += " + ";
            mod += format_term(modulus_[i], format_uni_mono(static_cast<int>(i), "x"));
            first = false;
        }
        return "F_" + std::to_string(p_) + "[x]/(" + mod + ")";
    }
    case RingKind::finite_field: return "F_" + std::to_string(size());
    case RingKind::laurent_rational: return "Q[x,x^-1]";
    case RingKind::truncated_multivar: {
        std::string vars = nvars_ == 1 ? "x1" : "x1..x" + std::to_string(nvars_);
        std::string cut = trunc_ == TruncationKind::total_degree
                              ? "deg>=" + std::to_string(bound_)
                              : "xi^" + std::to_string(bound_);
        return "F_" + std::to_string(p_) + "[" + vars + "]/(" + cut + ")";
    }
    case RingKind::function_ring:
        return "Fun(" + std::to_string(npoints_) + " points, F_" + std::to_string(p_) + ")";
    case RingKind::quotient_ring:
        return parent_->describe() + " / ideal[" + std::to_string(parent_->size() / reps_.size()) + "]";
    }
    return "?";
}

RingElem Ring::zero() const {
    switch (kind_) {
    case RingKind::modular:
    case RingKind::quotient_ring: return RingElem(shared_from_this(), std::int64_t{0});
    case RingKind::poly_quotient:
    case RingKind::finite_field:
        return RingElem(shared_from_this(), std::vector<std::int64_t>(poly_deg(modulus_), 0));
    case RingKind::truncated_multivar:
        return RingElem(shared_from_this(), std::vector<std::int64_t>(basis_.size(), 0));
    case RingKind::function_ring:
        return RingElem(shared_from_this(), std::vector<std::int64_t>(npoints_, 0));
    case RingKind::laurent_rational: return RingElem(shared_from_this(), LaurentPoly{});
    }
    throw Error("unreachable");
}

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(std::int64_t v) const {
    switch (kind_) {
    case RingKind::modular: return RingElem(shared_from_this(), mod_reduce(v, n_));
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        std::vector<std::int64_t> c(poly_deg(modulus_), 0);
        c[0] = mod_reduce(v, p_);
        return RingElem(shared_from_this(), std::move(c));
    }
    case RingKind::truncated_multivar: {
        std::vector<std::int64_t> c(basis_.size(), 0);
        c[0] = mod_reduce(v, p_);
        return RingElem(shared_from_this(), std::move(c));
    }
    case RingKind::function_ring:
        return RingElem(shared_from_this(),
                        std::vector<std::int64_t>(npoints_, mod_reduce(v, p_)));
    case RingKind::laurent_rational: {
        LaurentPoly m;
        if (v != 0) m[0] = Rational(v);
        return RingElem(shared_from_this(), std::move(m));
    }
    case RingKind::quotient_ring: {
        return project(parent_->from_int(v));
    }
    }
    throw Error("unreachable");
}

std::uint64_t Ring::index_of(const RingElem& a) const {
    switch (kind_) {
    case RingKind::modular: return static_cast<std::uint64_t>(std::get<std::int64_t>(a.payload()));
    case RingKind::poly_quotient:
    case RingKind::finite_field:
    case RingKind::truncated_multivar:
    case RingKind::function_ring: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        std::uint64_t idx = 0, mult = 1;
        for (auto c : v) {
            idx += static_cast<std::uint64_t>(c) * mult;
            mult *= static_cast<std::uint64_t>(p_);
        }
        return idx;
    }
    case RingKind::quotient_ring: {
        auto rep = static_cast<std::uint64_t>(std::get<std::int64_t>(a.payload()));
        auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
        assert(it != reps_.end() && *it == rep);
        return static_cast<std::uint64_t>(it - reps_.begin());
    }
    case RingKind::laurent_rational:
        throw UnsupportedError("the rational Laurent ring is not enumerable");
    }
    throw Error("unreachable");
}

RingElem Ring::element_at(std::uint64_t index) const {
    switch (kind_) {
    case RingKind::modular: return RingElem(shared_from_this(), static_cast<std::int64_t>(index));
    case RingKind::poly_quotient:
    case RingKind::finite_field:
    case RingKind::truncated_multivar:
    case RingKind::function_ring: {
        std::size_t len = kind_ == RingKind::function_ring ? static_cast<std::size_t>(npoints_)
                          : kind_ == RingKind::truncated_multivar ? basis_.size()
                                                                  : static_cast<std::size_t>(poly_deg(modulus_));
        std::vector<std::int64_t> v(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_));
            index /= static_cast<std::uint64_t>(p_);
        }
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::quotient_ring:
        return RingElem(shared_from_this(), static_cast<std::int64_t>(reps_.at(index)));
    case RingKind::laurent_rational:
        throw UnsupportedError("the rational Laurent ring is not enumerable");
    }
    throw Error("unreachable");
}

std::vector<RingElem> Ring::elements() const {
    if (!is_finite()) throw UnsupportedError("cannot enumerate an infinite ring");
    guards::check_ring_enum(size(), "ring enumeration");
    std::vector<RingElem> out;
    out.reserve(size());
    for (std::uint64_t i = 0; i < size(); ++i) out.push_back(element_at(i));
    return out;
}

std::vector<RingElem> Ring::additive_generators() const {
    switch (kind_) {
    case RingKind::modular: return {one()};
    case RingKind::poly_quotient:
    case RingKind::finite_field:
    case RingKind::truncated_multivar:
    case RingKind::function_ring: {
        std::size_t len = kind_ == RingKind::function_ring ? static_cast<std::size_t>(npoints_)
                          : kind_ == RingKind::truncated_multivar ? basis_.size()
                                                                  : static_cast<std::size_t>(poly_deg(modulus_));
        std::vector<RingElem> out;
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<std::int64_t> v(len, 0);
            v[i] = 1;
            out.emplace_back(shared_from_this(), std::move(v));
        }
        return out;
    }
    case RingKind::quotient_ring: {
        std::set<RingElem> seen;
        std::vector<RingElem> out;
        for (const auto& g : parent_->additive_generators()) {
            RingElem q = project(g);
            if (!q.is_zero() && seen.insert(q).second) out.push_back(q);
        }
        if (out.empty()) out.push_back(one());
        return out;
    }
    case RingKind::laurent_rational:
        throw UnsupportedError("the rational Laurent ring has no finite additive generating set");
    }
    throw Error("unreachable");
}

std::vector<RingElem> Ring::ring_generators() const {
    switch (kind_) {
    case RingKind::modular: return {};
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        std::vector<std::int64_t> x(poly_deg(modulus_), 0);
        if (x.size() > 1) x[1] = 1; // degree-1 modulus: the ring is F_p, no generator needed
        else return {};
        return {RingElem(shared_from_this(), std::move(x))};
    }
    case RingKind::truncated_multivar: {
        std::vector<RingElem> out;
        for (int v = 0; v < nvars_; ++v) {
            std::vector<int> mono(nvars_, 0);
            mono[v] = 1;
            auto it = basis_index_.find(mono);
            if (it == basis_index_.end()) continue; // bound == 1 degenerate case
            std::vector<std::int64_t> c(basis_.size(), 0);
            c[static_cast<std::size_t>(it->second)] = 1;
            out.emplace_back(shared_from_this(), std::move(c));
        }
        return out;
    }
    case RingKind::function_ring: {
        std::vector<RingElem> out;
        for (int i = 0; i < npoints_; ++i) {
            std::vector<std::int64_t> v(npoints_, 0);
            v[i] = 1;
            out.emplace_back(shared_from_this(), std::move(v));
        }
        return out;
    }
    case RingKind::laurent_rational: {
        LaurentPoly x;
        x[1] = 1;
        return {RingElem(shared_from_this(), std::move(x))};
    }
    case RingKind::quotient_ring: {
        std::vector<RingElem> out;
        for (const auto& g : parent_->ring_generators()) out.push_back(project(g));
        return out;
    }
    }
    throw Error("unreachable");
}

// -------------------------------------------------------- kind accessors

std::int64_t Ring::modulus_n() const { return n_; }
std::int64_t Ring::characteristic_p() const { return p_; }
const std::vector<std::int64_t>& Ring::poly_modulus() const { return modulus_; }
int Ring::poly_degree() const { return poly_deg(modulus_); }
int Ring::nvars() const { return nvars_; }
TruncationKind Ring::truncation() const { return trunc_; }
int Ring::truncation_bound() const { return bound_; }
const std::vector<std::vector<int>>& Ring::monomial_basis() const { return basis_; }
int Ring::npoints() const { return npoints_; }
Ring::Ptr Ring::parent() const { return parent_; }
const std::vector<std::uint64_t>& Ring::coset_reps() const { return reps_; }

RingElem Ring::project(const RingElem& parent_elem) const {
    if (kind_ != RingKind::quotient_ring) throw UnsupportedError("project: not a quotient ring");
    if (!parent_elem.ring().same_as(*parent_)) throw DomainMismatchError("project: foreign element");
    std::uint64_t rep = canon_[parent_->index_of(parent_elem)];
    return RingElem(shared_from_this(), static_cast<std::int64_t>(rep));
}

RingElem Ring::lift(const RingElem& quotient_elem) const {
    if (kind_ != RingKind::quotient_ring) throw UnsupportedError("lift: not a quotient ring");
    return parent_->element_at(
        static_cast<std::uint64_t>(std::get<std::int64_t>(quotient_elem.payload())));
}

// ------------------------------------------------------------- arithmetic

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
    require_same_ring(a, b, "add");
    switch (kind_) {
    case RingKind::modular:
        return RingElem(shared_from_this(),
                        mod_reduce(std::get<std::int64_t>(a.payload()) +
                                       std::get<std::int64_t>(b.payload()), n_));
    case RingKind::poly_quotient:
    case RingKind::finite_field:
    case RingKind::truncated_multivar:
    case RingKind::function_ring: {
        auto v = std::get<std::vector<std::int64_t>>(a.payload());
        const auto& w = std::get<std::vector<std::int64_t>>(b.payload());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_reduce(v[i] + w[i], p_);
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::laurent_rational: {
        auto m = std::get<LaurentPoly>(a.payload());
        for (const auto& [e, c] : std::get<LaurentPoly>(b.payload())) {
            auto it = m.find(e);
            if (it == m.end()) m[e] = c;
            else {
                it->second += c;
                if (it->second == 0) m.erase(it);
            }
        }
        return RingElem(shared_from_this(), std::move(m));
    }
    case RingKind::quotient_ring:
        return project(lift(a) + lift(b));
    }
    throw Error("unreachable");
}

RingElem Ring::neg(const RingElem& a) const {
    switch (kind_) {
    case RingKind::modular:
        return RingElem(shared_from_this(), mod_reduce(-std::get<std::int64_t>(a.payload()), n_));
    case RingKind::poly_quotient:
    case RingKind::finite_field:
    case RingKind::truncated_multivar:
    case RingKind::function_ring: {
        auto v = std::get<std::vector<std::int64_t>>(a.payload());
        for (auto& c : v) c = mod_reduce(-c, p_);
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::laurent_rational: {
        auto m = std::get<LaurentPoly>(a.payload());
        for (auto& [e, c] : m) c = -c;
        return RingElem(shared_from_this(), std::move(m));
    }
    case RingKind::quotient_ring:
        return project(-lift(a));
    }
    throw Error("unreachable");
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
    require_same_ring(a, b, "mul");
    switch (kind_) {
    case RingKind::modular:
        return RingElem(shared_from_this(),
                        mod_reduce(std::get<std::int64_t>(a.payload()) *
                                       std::get<std::int64_t>(b.payload()), n_));
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        Poly prod = poly_mul_raw(std::get<std::vector<std::int64_t>>(a.payload()),
                                 std::get<std::vector<std::int64_t>>(b.payload()), p_);
        auto [q, r] = poly_divmod(std::move(prod), modulus_, p_);
        (void)q;
        r.resize(static_cast<std::size_t>(poly_deg(modulus_)), 0);
        return RingElem(shared_from_this(), std::move(r));
    }
    case RingKind::truncated_multivar: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        const auto& w = std::get<std::vector<std::int64_t>>(b.payload());
        std::vector<std::int64_t> out(basis_.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (w[j] == 0) continue;
                int t = prod_table_[i][j];
                if (t >= 0)
                    out[static_cast<std::size_t>(t)] =
                        mod_reduce(out[static_cast<std::size_t>(t)] + v[i] * w[j], p_);
            }
        }
        return RingElem(shared_from_this(), std::move(out));
    }
    case RingKind::function_ring: {
        auto v = std::get<std::vector<std::int64_t>>(a.payload());
        const auto& w = std::get<std::vector<std::int64_t>>(b.payload());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_reduce(v[i] * w[i], p_);
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::laurent_rational: {
        LaurentPoly out;
        for (const auto& [e1, c1] : std::get<LaurentPoly>(a.payload()))
            for (const auto& [e2, c2] : std::get<LaurentPoly>(b.payload())) {
                Rational c = c1 * c2;
                auto it = out.find(e1 + e2);
                if (it == out.end()) out[e1 + e2] = c;
                else {
                    it->second += c;
                    if (it->second == 0) out.erase(it);
                }
            }
        return RingElem(shared_from_this(), std::move(out));
    }
    case RingKind::quotient_ring:
        return project(lift(a) * lift(b));
    }
    throw Error("unreachable");
}

bool Ring::is_unit(const RingElem& a) const {
    switch (kind_) {
    case RingKind::modular: {
        std::int64_t v = std::get<std::int64_t>(a.payload());
        return std::gcd(v, n_) == 1;
    }
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        Poly v = poly_strip(std::get<std::vector<std::int64_t>>(a.payload()));
        if (v.empty()) return false;
        auto [g, u] = poly_half_gcdext(v, modulus_, p_);
        (void)u;
        return poly_deg(g) == 0;
    }
    case RingKind::truncated_multivar:
        // constant part invertible, the rest is nilpotent
        return std::get<std::vector<std::int64_t>>(a.payload())[0] != 0;
    case RingKind::function_ring: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
    }
    case RingKind::laurent_rational: {
        const auto& m = std::get<LaurentPoly>(a.payload());
        return m.size() == 1;
    }
    case RingKind::quotient_ring:
        return static_cast<bool>(inverse(a));
    }
    throw Error("unreachable");
}

std::optional<RingElem> Ring::inverse(const RingElem& a) const {
    switch (kind_) {
    case RingKind::modular: {
        std::int64_t inv = mod_inverse_i64(std::get<std::int64_t>(a.payload()), n_);
        if (inv < 0) return std::nullopt;
        return RingElem(shared_from_this(), inv);
    }
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        Poly v = poly_strip(std::get<std::vector<std::int64_t>>(a.payload()));
        if (v.empty()) return std::nullopt;
        auto [g, u] = poly_half_gcdext(v, modulus_, p_);
        if (poly_deg(g) != 0) return std::nullopt;
        u.resize(static_cast<std::size_t>(poly_deg(modulus_)), 0);
        return RingElem(shared_from_this(), std::move(u));
    }
    case RingKind::truncated_multivar: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        if (v[0] == 0) return std::nullopt;
        std::int64_t cinv = mod_inverse_i64(v[0], p_);
        RingElem scaled = mul(a, from_int(cinv));   // 1 + n, n nilpotent
        RingElem n = sub(scaled, one());
        RingElem acc = one(), power = one();
        for (int k = 0; k < 64; ++k) {
            power = mul(power, neg(n));
            if (power.is_zero()) break;
            acc = add(acc, power);
        }
        return mul(acc, from_int(cinv));
    }
    case RingKind::function_ring: {
        auto v = std::get<std::vector<std::int64_t>>(a.payload());
        for (auto& c : v) {
            std::int64_t inv = mod_inverse_i64(c, p_);
            if (inv < 0) return std::nullopt;
            c = inv;
        }
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::laurent_rational: {
        const auto& m = std::get<LaurentPoly>(a.payload());
        if (m.size() != 1) return std::nullopt;
        LaurentPoly inv;
        inv[-m.begin()->first] = Rational(1) / m.begin()->second;
        return RingElem(shared_from_this(), std::move(inv));
    }
    case RingKind::quotient_ring: {
        for (std::uint64_t i = 0; i < reps_.size(); ++i) {
            RingElem b = element_at(i);
            if (mul(a, b).is_one()) return b;
        }
        return std::nullopt;
    }
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------------ text

std::string Ring::to_text(const RingElem& a) const {
    switch (kind_) {
    case RingKind::modular: return std::to_string(std::get<std::int64_t>(a.payload()));
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += format_term(v[i], format_uni_mono(static_cast<int>(i), "x"));
        }
        return out.empty() ? "0" : out;
    }
    case RingKind::truncated_multivar: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            std::string mono;
            for (int var = 0; var < nvars_; ++var) {
                int e = basis_[i][static_cast<std::size_t>(var)];
                if (e == 0) continue;
                mono += "x" + std::to_string(var + 1);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) mono = "1";
            if (!out.empty()) out += " + ";
            out += format_term(v[i], mono);
        }
        return out.empty() ? "0" : out;
    }
    case RingKind::function_ring: {
        const auto& v = std::get<std::vector<std::int64_t>>(a.payload());
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out + ")";
    }
    case RingKind::laurent_rational: {
        const auto& m = std::get<LaurentPoly>(a.payload());
        if (m.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : m) {
            if (!out.empty()) out += " + ";
            if (e == 0) { out += rational_to_text(c); continue; }
            std::string mono = e == 1 ? "x" : "x^" + std::to_string(e);
            if (c == 1) out += mono;
            else if (c == -1) out += "-" + mono;
            else out += rational_to_text(c) + mono;
        }
        return out;
    }
    case RingKind::quotient_ring: return parent_->to_text(lift(a));
    }
    throw Error("unreachable");
}

namespace {

// coefficient digits (no sign), then an optional monomial in `var`
std::pair<std::int64_t, int> parse_uni_term(const std::string& t, const char* ctx) {
    std::size_t i = 0;
    std::int64_t coeff = 1;
    bool have_digits = false;
    std::string digits;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
    if (!digits.empty()) { coeff = std::stoll(digits); have_digits = true; }
    int degree = 0;
    if (i < t.size() && t[i] == 'x') {
        ++i;
        degree = 1;
        if (i < t.size() && t[i] == '^') {
            ++i;
            std::string ed;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ed += t[i++];
            if (ed.empty()) throw ParseError(std::string(ctx) + ": missing exponent in '" + t + "'");
            degree = std::stoi(ed);
        }
    } else if (!have_digits) {
        throw ParseError(std::string(ctx) + ": bad term '" + t + "'");
    }
    if (i != t.size()) throw ParseError(std::string(ctx) + ": trailing junk in '" + t + "'");
    return {coeff, degree};
}

} // namespace

RingElem Ring::parse(std::string_view text) const {
    std::string s(text);
    switch (kind_) {
    case RingKind::modular: {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw ParseError("trailing junk in '" + s + "'");
            return from_int(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad residue literal '" + s + "'");
        }
    }
    case RingKind::poly_quotient:
    case RingKind::finite_field: {
        auto terms = split_signed_terms(s);
        std::vector<std::int64_t> v(static_cast<std::size_t>(poly_deg(modulus_)), 0);
        for (const auto& [sign, t] : terms) {
            auto [coeff, degree] = parse_uni_term(t, "polynomial literal");
            if (degree >= poly_deg(modulus_))
                throw ParseError("degree " + std::to_string(degree) + " not reduced in '" + s + "'");
            v[static_cast<std::size_t>(degree)] =
                mod_reduce(v[static_cast<std::size_t>(degree)] + sign * coeff, p_);
        }
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::truncated_multivar: {
        auto terms = split_signed_terms(s);
        std::vector<std::int64_t> v(basis_.size(), 0);
        for (const auto& [sign, t] : terms) {
            std::size_t i = 0;
            std::int64_t coeff = 1;
            std::string digits;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
            bool have_digits = !digits.empty();
            if (have_digits) coeff = std::stoll(digits);
            std::vector<int> expo(static_cast<std::size_t>(nvars_), 0);
            bool have_var = false;
            while (i < t.size() && t[i] == 'x') {
                ++i;
                std::string vd;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) vd += t[i++];
                if (vd.empty()) throw ParseError("variable index missing in '" + t + "'");
                int var = std::stoi(vd);
                if (var < 1 || var > nvars_) throw ParseError("no variable x" + vd);
                int e = 1;
                if (i < t.size() && t[i] == '^') {
                    ++i;
                    std::string ed;
                    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ed += t[i++];
                    if (ed.empty()) throw ParseError("missing exponent in '" + t + "'");
                    e = std::stoi(ed);
                }
                expo[static_cast<std::size_t>(var - 1)] += e;
                have_var = true;
            }
            if (i != t.size() || (!have_digits && !have_var))
                throw ParseError("bad monomial term '" + t + "'");
            auto it = basis_index_.find(expo);
            if (it == basis_index_.end())
                throw ParseError("monomial in '" + t + "' is killed by the truncation");
            v[static_cast<std::size_t>(it->second)] =
                mod_reduce(v[static_cast<std::size_t>(it->second)] + sign * coeff, p_);
        }
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::function_ring: {
        std::string body;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) body += c;
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw ParseError("function literal must look like (v0,v1,...)");
        body = body.substr(1, body.size() - 2);
        std::vector<std::int64_t> v;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(mod_reduce(std::stoll(item), p_));
        if (static_cast<int>(v.size()) != npoints_)
            throw ParseError("function literal needs exactly " + std::to_string(npoints_) + " values");
        return RingElem(shared_from_this(), std::move(v));
    }
    case RingKind::laurent_rational: {
        auto terms = split_signed_terms(s);
        RingElem acc = zero();
        for (const auto& [sign, t] : terms) {
            std::size_t i = 0;
            std::string coeff_text;
            while (i < t.size() &&
                   (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/'))
                coeff_text += t[i++];
            Rational coeff = coeff_text.empty() ? Rational(1) : parse_rational(coeff_text);
            std::int64_t expo = 0;
            if (i < t.size() && t[i] == 'x') {
                ++i;
                expo = 1;
                if (i < t.size() && t[i] == '^') {
                    ++i;
                    std::string ed;
                    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ed += t[i++];
                    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ed += t[i++];
                    if (ed.empty() || ed == "-" || ed == "+")
                        throw ParseError("missing exponent in '" + t + "'");
                    expo = std::stoll(ed);
                }
            } else if (coeff_text.empty()) {
                throw ParseError("bad Laurent term '" + t + "'");
            }
            if (i != t.size()) throw ParseError("trailing junk in '" + t + "'");
            LaurentPoly mono;
            Rational c = sign < 0 ? -coeff : coeff;
            if (c != 0) mono[expo] = c;
            acc = add(acc, RingElem(shared_from_this(), std::move(mono)));
        }
        return acc;
    }
    case RingKind::quotient_ring:
        return project(parent_->parse(text));
    }
    throw Error("unreachable");
}

// -------------------------------------------------------------- RingElem

RingElem::RingElem(Ring::Ptr owner, Payload payload)
    : owner_(std::move(owner)), payload_(std::move(payload)) {}

bool RingElem::is_zero() const {
    switch (owner_->kind()) {
    case RingKind::modular: return std::get<std::int64_t>(payload_) == 0;
    case RingKind::quotient_ring: return std::get<std::int64_t>(payload_) == 0;
    case RingKind::laurent_rational: return std::get<Ring::LaurentPoly>(payload_).empty();
    default: {
        const auto& v = std::get<std::vector<std::int64_t>>(payload_);
        return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
    }
    }
}

bool RingElem::is_one() const { return *this == owner_->one(); }

bool operator==(const RingElem& a, const RingElem& b) {
    if (!a.owner_ || !b.owner_) return a.owner_ == b.owner_;
    if (a.owner_.get() != b.owner_.get() && !a.owner_->same_as(*b.owner_)) return false;
    return a.payload_ == b.payload_;
}

bool operator<(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b, "compare");
    if (a.owner_->kind() == RingKind::laurent_rational)
        return std::get<Ring::LaurentPoly>(a.payload_) < std::get<Ring::LaurentPoly>(b.payload_);
    if (std::holds_alternative<std::int64_t>(a.payload_))
        return std::get<std::int64_t>(a.payload_) < std::get<std::int64_t>(b.payload_);
    // canonical order = enumeration order = radix value, most significant last
    const auto& v = std::get<std::vector<std::int64_t>>(a.payload_);
    const auto& w = std::get<std::vector<std::int64_t>>(b.payload_);
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != w[i]) return v[i] < w[i];
    return false;
}

void require_same_ring(const RingElem& a, const RingElem& b, const char* op) {
    if (a.ring_ptr().get() == b.ring_ptr().get()) return;
    if (!a.ring().same_as(b.ring()))
        throw DomainMismatchError(std::string(op) + ": operands from different rings (" +
                                  a.ring().describe() + " vs " + b.ring().describe() + ")");
}

// ------------------------------------------------------- derived queries

std::vector<RingElem> annihilator(const RingElem& a) {
    const Ring& R = a.ring();
    if (!R.is_finite())
        throw UnsupportedError("annihilator: ring is not enumerable (" + R.describe() + ")");
    guards::check_ring_enum(R.size(), "annihilator");
    std::vector<RingElem> out;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
        RingElem c = R.element_at(i);
        if ((a * c).is_zero()) out.push_back(std::move(c));
    }
    return out;
}

std::vector<RingElem> zero_divisor_set(const Ring::Ptr& ring) {
    if (!ring->is_finite())
        throw UnsupportedError("zero_divisor_set: ring is not enumerable (" + ring->describe() + ")");
    guards::check_ring_enum(ring->size(), "zero_divisor_set");
    std::vector<RingElem> out;
    for (std::uint64_t i = 0; i < ring->size(); ++i) {
        RingElem a = ring->element_at(i);
        for (std::uint64_t j = 1; j < ring->size(); ++j) { // element_at(0) is 0
            if ((a * ring->element_at(j)).is_zero()) {
                out.push_back(a);
                break;
            }
        }
    }
    return out;
}

} // namespace crossed_forge
