#ifndef CROSSED_FORGE_GUARDS_HPP
#define CROSSED_FORGE_GUARDS_HPP

#include <cstdint>
#include <string>

namespace crossed_forge::guards {

// Defaults: rings with more than 10^4 elements, groups of order more than 24
// and product spaces larger than 10^6 are refused by exhaustive operations.
// Setting CROSSED_FORGE_MAX_ENUM=<N> replaces all three limits by N.

std::uint64_t ring_enum_limit();
std::uint64_t group_enum_limit();
std::uint64_t product_enum_limit();

void check_ring_enum(std::uint64_t ring_size, const std::string& context);
void check_group_enum(std::uint64_t group_order, const std::string& context);
void check_product_enum(std::uint64_t space_size, const std::string& context);

} // namespace crossed_forge::guards

#endif
