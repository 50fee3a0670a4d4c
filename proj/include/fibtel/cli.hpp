#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibtel/series.hpp"

namespace fibtel::cli {

inline constexpr int kExitOk = 0;      // success / certified / all identities hold
inline constexpr int kExitFailed = 1;  // verification failure, uncertified, runtime error
inline constexpr int kExitUsage = 2;   // bad verb, flag, or parameter

/// Raised for anything the user got wrong on the command line. Nothing is
/// written to stdout before parsing finishes, so exit 2 never produces
/// partial output.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Command {
    enum class Verb { eval, certify, verify, fuzz, crosscheck, closed_form, fib, lucas, bench, list };
    enum class Format { text, json, csv };

    Verb verb = Verb::list;
    Format format = Format::text;
    std::optional<SeriesSpec> series;
    std::string lemma;  // verify/fuzz selector: "1".."8" or "ratio"; empty = all (fuzz)
    std::map<std::string, std::uint64_t> grid;  // verify --grid overrides
    std::uint64_t terms = 10;
    unsigned digits = 30;
    std::uint64_t index = 0;                  // fib/lucas argument
    std::optional<std::uint64_t> fuzz_bound;  // fuzz --bound (index cap)
    bool inject_bad_target = false;           // hidden hook for the negative path
};

/// argv (without the program name) -> validated Command.
/// Series parameters are validated through make_series, so parity and
/// bound violations surface here as UsageError.
Command parse_command(const std::vector<std::string>& args);

struct Rendered {
    std::string text;
    int exit_code = kExitOk;
};

/// Executes the command and renders the result in the requested format.
Rendered render_report(const Command& command);

/// Full CLI entry: honors FIBTEL_INDEX_BOUND, maps UsageError to exit 2
/// and runtime failures to exit 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibtel::cli
