#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kagaskit::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("error while reading " + path.string());
  return buf.str();
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  return split_lines(read_file(path));
}

void write_output(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw InputError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("error while writing " + path);
}

PairFile read_pairs(const std::filesystem::path& path, bool lenient) {
  PairFile f;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab = line.find('\t');
    const bool ok = tab != std::string::npos && line.find('\t', tab + 1) == std::string::npos;
    if (ok) {
      f.pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    } else if (lenient) {
      f.pairs.emplace_back(line, "");
    } else {
      std::cerr << path.string() << ":" << i + 1 << ": expected original<TAB>corrected, skipped\n";
      ++f.warnings;
      continue;
    }
    f.line_numbers.push_back(i + 1);
  }
  return f;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace kagaskit::cli
