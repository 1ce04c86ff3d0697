#ifndef CROSSED_FORGE_SCENARIO_HPP
#define CROSSED_FORGE_SCENARIO_HPP

#include "crossed_forge/catalog.hpp"
#include "crossed_forge/crossed_system.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace crossed_forge {

using Json = nlohmann::ordered_json;

struct CheckSpec {
    std::string kind; // verify | center | commutant | maximal | commutative |
                      // ideal | lift | descend | obstruction | theorem-suite
    Json args;
};

struct OutputOptions {
    bool include_timings = false;
    std::size_t max_listed_elements = 128;
};

struct Scenario {
    std::string name;
    Json system_spec;          // as written, for round-tripping
    CrossedSystem::Ptr system; // resolved; inline systems stay unvalidated
    std::vector<CheckSpec> checks;
    OutputOptions output;
};

/// Parses a scenario document: top-level keys `system`, `checks`, `output`.
/// The system is either {"catalog": name, ...params} or an inline
/// ring/group/sigma/alpha description.  Inline systems are built without
/// validation so a later `verify` check can report the violations.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario");

/// Runs every check; guard violations become per-check error entries.
Json run_scenario(const Scenario& s);

/// format: "json" (canonical, byte-stable) or "text".
std::string emit_report(const Json& report, const std::string& format);

/// Round-trip support: rebuilds the scenario document.
Json emit_scenario(const Scenario& s);

} // namespace crossed_forge

#endif
