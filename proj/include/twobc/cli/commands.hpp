#pragma once

#include "twobc/cli/config.hpp"
#include "twobc/cli/output.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twobc::cli
{
    /// Exit statuses of the command-line tool.
    enum ExitStatus : int
    {
        exit_ok = 0,
        exit_numerical_failure = 1,
        exit_input_error = 2,
    };

    /// Command-line flags that take precedence over config keys.
    struct Overrides
    {
        std::optional<std::string> form;
        std::optional<double> tolerance;
        bool bruteforce = false;
    };

    struct CommandOutput
    {
        nlohmann::json report;
        CsvTable table;
    };

    CommandOutput run_pairs(const KeyValueConfig& cfg, const Overrides& ov);
    CommandOutput run_scan(const KeyValueConfig& cfg, const Overrides& ov);
    CommandOutput run_bvp(const KeyValueConfig& cfg, const Overrides& ov);
    CommandOutput run_pathint(const KeyValueConfig& cfg, const Overrides& ov);
    CommandOutput run_dispersion(const KeyValueConfig& cfg, const Overrides& ov);
    CommandOutput run_compton(const KeyValueConfig& cfg, const Overrides& ov);

    /// Full command-line entry point; `args` excludes the program name.
    /// Writes <out>/<subcommand>.csv and <out>/<subcommand>.json.
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
} // namespace twobc::cli
