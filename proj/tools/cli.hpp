#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace edp::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_budget_exhausted = 3,
    exit_internal = 4,
};

inline constexpr const char* kVersion = "0.1.0";

/// One `edp` invocation; `args` excludes the program name. The report goes to
/// `out`, diagnostics and usage text to `err`. If `manifest` is non-null it
/// receives the run manifest (also written by `--manifest FILE`).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             nlohmann::ordered_json* manifest = nullptr);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace edp::cli
