#include "crossed_forge/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw crossed_forge::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossed-forge: exact crossed-product algebra workbench"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, format = "json";

    auto* run = app.add_subcommand("run", "run a scenario file and emit a report");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    run->add_option("--out", out_path, "write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "check the crossed-system laws only");
    verify->add_option("scenario", scenario_path, "scenario JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "catalog utilities");
    auto* list = catalog->add_subcommand("list", "list the example-system constructors");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& doc : crossed_forge::catalog_constructors())
                std::cout << doc.id << "(" << doc.params << ")\n    " << doc.summary << "\n";
            return 0;
        }
        if (verify->parsed()) {
            auto s = crossed_forge::parse_scenario(read_file(scenario_path), stem_of(scenario_path));
            auto rep = crossed_forge::verify_crossed_system(*s.system);
            if (rep.valid()) {
                std::cout << "valid: " << s.system->describe() << "\n";
            } else {
                std::cout << "invalid: " << s.system->describe() << "\n";
                for (const auto& issue : rep.issues)
                    std::cout << "  " << issue.condition << ": " << issue.witness << "\n";
            }
            return 0; // verdicts are data, not process failures
        }
        // run
        auto s = crossed_forge::parse_scenario(read_file(scenario_path), stem_of(scenario_path));
        auto report = crossed_forge::run_scenario(s);
        std::string text = crossed_forge::emit_report(report, format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw crossed_forge::Error("cannot write '" + out_path + "'");
            out << text;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
