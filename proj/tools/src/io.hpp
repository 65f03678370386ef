#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kagaskit/m2.hpp"

namespace kagaskit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitWarnings = 1;
inline constexpr int kExitInput = 2;

// Anything that should end the run with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

// Lines without their terminators; a trailing newline does not add an
// empty last line.
std::vector<std::string> read_lines(const std::filesystem::path& path);
std::vector<std::string> split_lines(std::string_view text);

// "-" or empty writes to stdout.
void write_output(const std::string& path, std::string_view content);

struct PairFile {
  m2::SentencePairs pairs;
  std::vector<std::size_t> line_numbers;
  std::size_t warnings = 0;
};

// original<TAB>corrected per line. Blank lines are skipped. With
// `lenient`, a line without exactly one tab becomes (line, "") so the
// filters can reject it; otherwise it is reported and skipped.
PairFile read_pairs(const std::filesystem::path& path, bool lenient);

std::string format_fixed(double v, int decimals);

}  // namespace kagaskit::cli
