/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_TOOLS_CLI_HH
#define RCK_GUARD_TOOLS_CLI_HH 1

#include <rck/colouring.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rck::cli
{
    enum class Subcommand
    {
        arrow,
        cocritical,
        scan,
        saturated
    };

    enum class OutputFormat
    {
        json,
        text
    };

    namespace exit_codes
    {
        inline constexpr int ok = 0;
        inline constexpr int assertion_failed = 1;
        inline constexpr int input_error = 2;
        inline constexpr int indeterminate = 3;
    }

    struct RunConfig
    {
        Subcommand subcommand = Subcommand::arrow;

        std::optional<CliqueVector> spec;
        std::optional<int> t;

        /// At most one of these; with neither, graph6 lines come from the input stream.
        std::optional<std::string> construct;
        std::optional<std::string> input_file;

        bool lemmas = false;
        bool minimal = false;
        bool timing = false;
        bool oracle = false;

        std::optional<std::uint64_t> node_limit;
        int workers = 1;
        OutputFormat format = OutputFormat::json;

        /// Write records here instead of the output stream.
        std::optional<std::string> report_path;

        /// Append a graph6 line and a colour line for every negative arrowing verdict.
        std::optional<std::string> witness_path;

        /// Ramsey number for specs outside the built-in table.
        std::optional<int> user_r;
    };

    /**
     * Runs a subcommand. Records go to out (or report_path), diagnostics to
     * err. Returns 0 when everything checked holds, 1 when a structural
     * assertion fails, 2 on bad input and 3 when a node limit left some
     * result undecided.
     */
    auto run(const RunConfig &, std::istream & in, std::ostream & out, std::ostream & err) -> int;

    auto cmd_arrow(const RunConfig &, std::istream & in, std::ostream & out, std::ostream & err) -> int;
    auto cmd_cocritical(const RunConfig &, std::istream & in, std::ostream & out, std::ostream & err) -> int;
    auto cmd_scan(const RunConfig &, std::istream & in, std::ostream & out, std::ostream & err) -> int;
    auto cmd_saturated(const RunConfig &, std::istream & in, std::ostream & out, std::ostream & err) -> int;

    /// Parses argv into a RunConfig; throws CLI::ParseError subclasses on bad usage.
    auto parse_arguments(int argc, const char * const * argv) -> RunConfig;

    /// Entry point used by main: parses, runs, and maps errors to exit codes.
    auto main_with_streams(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
