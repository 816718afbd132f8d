#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teg/event_graph.hpp"

namespace teg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_inconsistent = 3;

/// Bad command-line value detected after option parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "inf", or a positive number of seconds with an optional s/m/h/d suffix.
DeltaT parse_delta_t(std::string_view text);

/// Comma-separated Δt values, "lin:a:b:n" (n evenly spaced values from a to
/// b) or "log:a:b:n" (n log-spaced values). The result must be strictly
/// increasing.
std::vector<DeltaT> parse_dt_grid(std::string_view text);

/// Run the tool on `args` (without the program name). Output that is not
/// sent to a file goes to `out`; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace teg::cli
