#ifndef CROSSED_FORGE_NUMERIC_HPP
#define CROSSED_FORGE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace crossed_forge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "3", "-5", "3/2" (canonical: reduced, denominator positive, no "/1").
std::string rational_to_text(const Rational& q);
Rational parse_rational(std::string_view text);

std::string bigint_to_text(const BigInt& n);
BigInt parse_bigint(std::string_view text);

/// q^n for a (possibly negative) big exponent; guards against absurd growth.
Rational rational_pow(const Rational& q, const BigInt& n);

/// Multiplicative order of q in Q^*: 1 for q=1, 2 for q=-1, 0 otherwise.
std::int64_t rational_mult_order(const Rational& q);

} // namespace crossed_forge

#endif
