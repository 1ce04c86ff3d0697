#include "crossed_forge/crossed_elem.hpp"

#include <algorithm>
#include <cctype>

namespace crossed_forge {

namespace {

void require_same_system(const CrossedElem& a, const CrossedElem& b, const char* op) {
    if (a.system().get() == b.system().get()) return;
    if (!a.system() || !b.system() ||
        !a.system()->ring()->same_as(*b.system()->ring()) ||
        !a.system()->group()->same_as(*b.system()->group()))
        throw DomainMismatchError(std::string(op) + ": elements from different crossed products");
}

} // namespace

CrossedElem CrossedElem::single(CrossedSystem::Ptr sys, const GroupElem& g, const RingElem& coeff) {
    CrossedElem u(std::move(sys));
    if (!g.group().same_as(*u.sys_->group()))
        throw DomainMismatchError("single: foreign group element");
    if (!coeff.ring().same_as(*u.sys_->ring()))
        throw DomainMismatchError("single: foreign coefficient");
    u.set(g, coeff);
    return u;
}

CrossedElem CrossedElem::one(CrossedSystem::Ptr sys) {
    auto e = sys->group()->identity();
    auto c = sys->ring()->one();
    return single(std::move(sys), e, c);
}

RingElem CrossedElem::coeff(const GroupElem& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? sys_->ring()->zero() : it->second;
}

std::vector<GroupElem> CrossedElem::support() const {
    std::vector<GroupElem> out;
    out.reserve(coeffs_.size());
    for (const auto& [g, c] : coeffs_) out.push_back(g);
    return out;
}

void CrossedElem::set(const GroupElem& g, const RingElem& v) {
    if (v.is_zero()) coeffs_.erase(g);
    else coeffs_.insert_or_assign(g, v);
}

CrossedElem CrossedElem::operator+(const CrossedElem& o) const {
    require_same_system(*this, o, "add");
    CrossedElem out = *this;
    for (const auto& [g, c] : o.coeffs_) {
        auto it = out.coeffs_.find(g);
        if (it == out.coeffs_.end()) out.coeffs_.emplace(g, c);
        else {
            RingElem sum = it->second + c;
            if (sum.is_zero()) out.coeffs_.erase(it);
            else it->second = std::move(sum);
        }
    }
    return out;
}

CrossedElem CrossedElem::operator-() const {
    CrossedElem out(sys_);
    for (const auto& [g, c] : coeffs_) out.coeffs_.emplace(g, -c);
    return out;
}

CrossedElem CrossedElem::operator-(const CrossedElem& o) const { return *this + (-o); }

CrossedElem CrossedElem::operator*(const CrossedElem& o) const {
    require_same_system(*this, o, "mul");
    CrossedElem out(sys_);
    // (a s)(b t) = a sigma_s(b) alpha(s,t) [st], summed over both supports
    for (const auto& [s, a] : coeffs_) {
        RingAutomorphism sig = sys_->sigma(s);
        for (const auto& [t, b] : o.coeffs_) {
            RingElem c = a * sig.apply(b) * sys_->alpha(s, t);
            if (c.is_zero()) continue;
            GroupElem st = s * t;
            auto it = out.coeffs_.find(st);
            if (it == out.coeffs_.end()) out.coeffs_.emplace(st, std::move(c));
            else {
                RingElem sum = it->second + c;
                if (sum.is_zero()) out.coeffs_.erase(it);
                else it->second = std::move(sum);
            }
        }
    }
    return out;
}

bool operator==(const CrossedElem& a, const CrossedElem& b) {
    require_same_system(a, b, "equality");
    return a.coeffs_ == b.coeffs_;
}

bool operator<(const CrossedElem& a, const CrossedElem& b) {
    require_same_system(a, b, "compare");
    return std::lexicographical_compare(
        a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

std::string CrossedElem::to_text() const { return crossed_to_text(*this); }

CrossedElem embed(const CrossedSystem::Ptr& sys, const RingElem& a) {
    if (!a.ring().same_as(*sys->ring())) throw DomainMismatchError("embed: foreign coefficient");
    CrossedElem u(sys);
    u.set(sys->group()->identity(), a);
    return u;
}

bool is_in_base(const CrossedElem& u) {
    if (u.is_zero()) return true;
    return u.support_size() == 1 && u.coeffs().begin()->first.is_identity();
}

bool commutes_direct(const CrossedElem& u, const CrossedElem& v) { return u * v == v * u; }

bool commutes_per_degree(const CrossedElem& u, const CrossedElem& v) {
    require_same_system(u, v, "commutes");
    // For each degree g: sum over st = g of a_s sigma_s(b_t) alpha(s,t)
    // must match the same sum with the roles of the coefficients swapped.
    CrossedElem::CoeffMap lhs, rhs;
    auto accumulate = [&](CrossedElem::CoeffMap& into, const CrossedElem& x, const CrossedElem& y) {
        for (const auto& [s, a] : x.coeffs()) {
            RingAutomorphism sig = x.system()->sigma(s);
            for (const auto& [t, b] : y.coeffs()) {
                RingElem c = a * sig.apply(b) * x.system()->alpha(s, t);
                GroupElem st = s * t;
                auto it = into.find(st);
                if (it == into.end()) into.emplace(st, std::move(c));
                else it->second = it->second + c;
            }
        }
        for (auto it = into.begin(); it != into.end();)
            it = it->second.is_zero() ? into.erase(it) : std::next(it);
    };
    accumulate(lhs, u, v);
    accumulate(rhs, v, u);
    return lhs == rhs;
}

bool commutes(const CrossedElem& u, const CrossedElem& v) {
    bool direct = commutes_direct(u, v);
    bool graded = commutes_per_degree(u, v);
    if (direct != graded)
        throw Error("internal: the direct and per-degree commutation tests disagree");
    return direct;
}

CrossedElem translate_deform(const CrossedElem& u, const GroupElem& g) {
    if (!g.group().same_as(*u.system()->group()))
        throw DomainMismatchError("translate_deform: foreign group element");
    CrossedElem out(u.system());
    for (const auto& [s, a] : u.coeffs()) {
        // alpha values are units, so a * alpha(s,g) stays nonzero
        out.coeffs_.emplace(s * g, a * u.system()->alpha(s, g));
    }
    return out;
}

CrossedElem kill(const CrossedElem& u, const RingElem& a) {
    const CrossedSystem::Ptr& sys = u.system();
    if (!a.ring().same_as(*sys->ring())) throw DomainMismatchError("kill: foreign ring element");
    if (!sys->ring()->is_commutative())
        throw UnsupportedError("kill: needs a commutative coefficient ring");
    CrossedElem ae = embed(sys, a);
    CrossedElem out = ae * u - u * ae;
    // equals sum over s != e of a_s (a - sigma_s(a)) [s]
    return out;
}

// -------------------------------------------------------------------- text

std::string crossed_to_text(const CrossedElem& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : u.coeffs()) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.to_text();
        bool needs_parens = coeff.find(" + ") != std::string::npos || coeff.front() == '-';
        if (needs_parens) coeff = "(" + coeff + ")";
        out += coeff + "*[" + g.to_text() + "]";
    }
    return out;
}

CrossedElem parse_crossed(const CrossedSystem::Ptr& sys, std::string_view text) {
    // split on '+' at depth 0 (parens and brackets both count as depth)
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '[') depth++;
        if (ch == ')' || ch == ']') depth--;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else cur += ch;
    }
    terms.push_back(cur);

    CrossedElem out(sys);
    for (auto& term : terms) {
        // trim
        auto first = term.find_first_not_of(" \t");
        auto last = term.find_last_not_of(" \t");
        if (first == std::string::npos) throw ParseError("empty term in '" + std::string(text) + "'");
        term = term.substr(first, last - first + 1);
        if (term == "0" && terms.size() == 1) return out; // the zero element

        auto star = term.rfind("*[");
        if (star == std::string::npos || term.back() != ']')
            throw ParseError("crossed-product term must look like coeff*[group]: '" + term + "'");
        std::string coeff_text = term.substr(0, star);
        std::string group_text = term.substr(star + 2, term.size() - star - 3);
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
            coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        RingElem c = sys->ring()->parse(coeff_text);
        GroupElem g = sys->group()->parse(group_text);
        CrossedElem t(sys);
        t.set(g, c);
        out = out + t;
    }
    return out;
}

} // namespace crossed_forge
