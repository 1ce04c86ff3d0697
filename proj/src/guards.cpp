#include "crossed_forge/guards.hpp"

#include "crossed_forge/errors.hpp"

#include <cstdlib>
#include <optional>

namespace crossed_forge::guards {

namespace {

std::optional<std::uint64_t> env_override() {
    static const std::optional<std::uint64_t> value = []() -> std::optional<std::uint64_t> {
        const char* raw = std::getenv("CROSSED_FORGE_MAX_ENUM");
        if (!raw || !*raw) return std::nullopt;
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || (end && *end)) return std::nullopt;
        return static_cast<std::uint64_t>(v);
    }();
    return value;
}

std::uint64_t limit_or(std::uint64_t dflt) {
    auto o = env_override();
    return o ? *o : dflt;
}

[[noreturn]] void fail(const std::string& what, std::uint64_t have, std::uint64_t limit,
                       const std::string& context) {
    throw EnumerationLimitError(context + ": " + what + " of size " + std::to_string(have) +
                                " exceeds the enumeration guard " + std::to_string(limit) +
                                " (set CROSSED_FORGE_MAX_ENUM to override)");
}

} // namespace

std::uint64_t ring_enum_limit() { return limit_or(10000); }
std::uint64_t group_enum_limit() { return limit_or(24); }
std::uint64_t product_enum_limit() { return limit_or(1000000); }

void check_ring_enum(std::uint64_t ring_size, const std::string& context) {
    if (ring_size > ring_enum_limit()) fail("ring", ring_size, ring_enum_limit(), context);
}

void check_group_enum(std::uint64_t group_order, const std::string& context) {
    if (group_order > group_enum_limit()) fail("group", group_order, group_enum_limit(), context);
}

void check_product_enum(std::uint64_t space_size, const std::string& context) {
    if (space_size > product_enum_limit()) fail("search space", space_size, product_enum_limit(), context);
}

} // namespace crossed_forge::guards
