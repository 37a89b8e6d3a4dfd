#pragma once

#include <filesystem>
#include <iosfwd>

#include "edp/signs.hpp"

namespace edp {

// EDPSIGNS v1:
//   EDPSIGNS v1 start=<s> len=<n>\n
//   then the signs as '+'/'-', 80 per line, every line newline-terminated.
// The prefix context (sum below start) is not stored; loaded sequences
// carry base_sum 0.

inline constexpr std::size_t kSignsPerLine = 80;

void write_edpsigns(std::ostream& out, const SignSequence& signs);
void write_edpsigns(const std::filesystem::path& path, const SignSequence& signs);

/// Throws format_error on any deviation from the layout above.
SignSequence read_edpsigns(std::istream& in);
SignSequence read_edpsigns(const std::filesystem::path& path);

}  // namespace edp
