#include "crossed_forge/numeric.hpp"

#include "crossed_forge/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace crossed_forge {

std::string rational_to_text(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw ParseError("rational literal has zero denominator: " + std::string(text));
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + std::string(text) + "': " + e.what());
    }
}

std::string bigint_to_text(const BigInt& n) { return n.str(); }

BigInt parse_bigint(std::string_view text) {
    try {
        return BigInt(std::string(text));
    } catch (const std::exception&) {
        throw ParseError("bad integer literal '" + std::string(text) + "'");
    }
}

Rational rational_pow(const Rational& q, const BigInt& n) {
    if (q == 0) {
        if (n < 0) throw PreconditionError("0 has no negative powers");
        return n == 0 ? Rational(1) : Rational(0);
    }
    BigInt e = abs(n);
    if (e > 100000)
        throw EnumerationLimitError("rational exponent " + e.str() + " exceeds the growth guard (100000)");
    Rational base = n < 0 ? Rational(denominator(q), numerator(q)) : q;
    Rational acc(1);
    unsigned long long k = e.convert_to<unsigned long long>();
    while (k > 0) { // square-and-multiply
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::int64_t rational_mult_order(const Rational& q) {
    if (q == 1) return 1;
    if (q == -1) return 2;
    return 0;
}

} // namespace crossed_forge
