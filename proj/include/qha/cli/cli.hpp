#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qha::cli {

/// 1 is reserved for internal failures (a broken invariant, not bad input).
enum ExitCode : int { computed = 0, internal_error = 1, invalid_input = 2, cap_exceeded = 3 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, a one-line summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Default corpus directory compiled into the binary.
std::string default_corpus_dir();

}  // namespace qha::cli
