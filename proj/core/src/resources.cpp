#include "kagaskit/resources.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "kagaskit/utf8.hpp"

#ifndef KAGASKIT_SOURCE_DATA_DIR
#define KAGASKIT_SOURCE_DATA_DIR ""
#endif
#ifndef KAGASKIT_INSTALL_DATA_DIR
#define KAGASKIT_INSTALL_DATA_DIR ""
#endif

namespace kagaskit::resources {

namespace fs = std::filesystem;

std::vector<fs::path> data_dir_candidates() {
  std::vector<fs::path> out;
  if (const char* env = std::getenv(std::string(kDataDirEnv).c_str()); env && *env) {
    out.emplace_back(env);
  }
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) out.push_back(exe.parent_path().parent_path() / "share" / "kagaskit");
  if (*KAGASKIT_INSTALL_DATA_DIR) out.emplace_back(KAGASKIT_INSTALL_DATA_DIR);
  if (*KAGASKIT_SOURCE_DATA_DIR) out.emplace_back(KAGASKIT_SOURCE_DATA_DIR);
  return out;
}

std::optional<fs::path> data_dir() {
  for (const auto& p : data_dir_candidates()) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) return p;
  }
  return std::nullopt;
}

std::optional<fs::path> data_file(std::string_view name) {
  auto dir = data_dir();
  if (!dir) return std::nullopt;
  fs::path p = *dir / name;
  std::error_code ec;
  if (!fs::is_regular_file(p, ec)) return std::nullopt;
  return p;
}

std::vector<std::string> read_word_list(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

}  // namespace kagaskit::resources
