#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "motus/catalog.hpp"
#include "motus/errors.hpp"
#include "motus/plot.hpp"
#include "motus/scenario.hpp"

// Command line front end.
//
//   motus list [--full]
//   motus run <scenario> [--out FILE] [--plot FILE] [--precision N]
//
// <scenario> is a file path or the name of a bundled catalog entry. The
// result table is written as csv, to --out when given, to a path named by
// the scenario's own `output` key otherwise, and to stdout when neither
// names a file. Messages are echoed to stdout as `#` comment lines so the
// csv stream stays machine readable.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 a valid scenario
// that fails while running (domain errors, impossible plots).

namespace motus::cli {

namespace detail {

inline std::string load_scenario_text(const std::string& target, std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(fs::path(target))) {
        std::ifstream in(target);
        if (!in) throw ConfigError("cannot read scenario file '" + target + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        name = fs::path(target).stem().string();
        return buffer.str();
    }
    if (const scenario::CatalogEntry* entry = scenario::find_catalog(target)) {
        name = entry->name;
        return entry->text;
    }
    throw ConfigError("no scenario file or catalog entry named '" + target + "'");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << content;
}

inline void print_list(std::ostream& out, bool full) {
    for (const auto& entry : scenario::catalog()) {
        out << entry.name;
        if (entry.expected == scenario::Expected::uncovered) out << "  [not covered]";
        if (entry.expected == scenario::Expected::error) out << "  [rejected input]";
        out << "\n    " << entry.title << "\n";
        if (full) {
            std::istringstream lines(entry.text);
            std::string line;
            while (std::getline(lines, line)) out << "    | " << line << "\n";
        }
    }
}

inline int run_target(const std::string& target, const std::string& out_flag,
                      const std::string& plot_flag, int precision, std::ostream& out) {
    std::string name;
    std::string text = load_scenario_text(target, name);
    scenario::Scenario s = scenario::parse_scenario(name, text);
    scenario::RunResult result = scenario::run_scenario(s, precision);

    std::string csv = table::to_csv(result.table);
    std::string csv_path = !out_flag.empty() ? out_flag : result.output_hint;
    if (!csv_path.empty()) {
        write_file(csv_path, csv);
        out << "wrote " << csv_path << "\n";
    } else {
        out << csv;
    }

    for (const auto& message : result.messages) out << "# " << message << "\n";

    std::string plot_path = !plot_flag.empty() ? plot_flag : result.plot_hint;
    if (!plot_path.empty()) {
        if (result.plot_kind.empty())
            throw ConfigError(name + ": a plot was requested but the scenario sets no plot.kind");
        write_file(plot_path, scenario::render_plot(result.table, result.plot_kind,
                                                    result.kappa));
        out << "wrote " << plot_path << "\n";
    }
    return 0;
}

} // namespace detail

// Testable entry point; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"an executable laboratory for historical theories of motion"};
    app.require_subcommand(1);

    std::string target, out_path, plot_path;
    int precision = 0;
    CLI::App* run = app.add_subcommand("run", "run a scenario file or catalog entry");
    run->add_option("scenario", target, "scenario file or catalog name")->required();
    run->add_option("--out", out_path, "write the result table to this csv file");
    run->add_option("--plot", plot_path, "write an svg plot to this file");
    run->add_option("--precision", precision, "decimal digits for approximate cells")
        ->check(CLI::Range(1, 80));

    bool full = false;
    CLI::App* list = app.add_subcommand("list", "list the bundled scenario catalog");
    list->add_flag("--full", full, "also print each scenario text");

    std::vector<const char*> argv;
    argv.push_back("motus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (list->parsed()) {
            detail::print_list(out, full);
            return 0;
        }
        return detail::run_target(target, out_path, plot_path, precision, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

inline int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace motus::cli
