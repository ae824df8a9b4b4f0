#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kmon/words.hpp"

namespace kmon::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kUnknown = 3,
};

/// Command-line word syntax: ASCII letters and digits, one character per
/// letter, `^k` repeating the preceding letter k times, `-` for the empty
/// word. Throws std::invalid_argument on anything else.
Word parse_word(std::string_view text);

/// Inverse of parse_word (no exponent compression).
std::string render_word(WordView w);

/// Runs the tool on argv[1..]; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmon::cli
