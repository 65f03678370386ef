#include "kagaskit/external_tagger.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <mutex>
#include <sys/wait.h>
#include <unistd.h>

#include "kagaskit/utf8.hpp"

namespace kagaskit::pos {

namespace {

void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { std::signal(SIGPIPE, SIG_IGN); });
}

bool write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
  return true;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Analysis parse_tagger_response(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  Analysis out;
  if (line.empty()) return out;
  for (auto triple : split_on(line, ' ')) {
    auto cols = split_on(triple, '\t');
    if (cols.size() != 3 || cols[0].empty() || cols[2].empty()) return {};
    out.push_back(TaggedMorpheme{std::string(cols[0]),
                                 std::string(cols[1].empty() ? cols[0] : cols[1]),
                                 std::string(cols[2])});
  }
  return out;
}

ExternalTagger::ExternalTagger(std::string command) : command_(std::move(command)) {
  ignore_sigpipe_once();
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe(in_pipe) != 0) throw TaggerProcessError("pipe: " + std::string(std::strerror(errno)));
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw TaggerProcessError("pipe: " + std::string(std::strerror(errno)));
  }
  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw TaggerProcessError("fork: " + std::string(std::strerror(errno)));
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  alive_ = true;
}

ExternalTagger::~ExternalTagger() { shutdown(); }

void ExternalTagger::shutdown() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    pid_ = -1;
  }
  alive_ = false;
}

bool ExternalTagger::read_line(std::string& line) {
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    char chunk[4096];
    ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Analysis ExternalTagger::tag_word(std::string_view word) {
  std::string line;
  if (!alive_ || word.find('\n') != std::string_view::npos ||
      !write_all(to_child_, std::string(word) + "\n") || !read_line(line)) {
    if (alive_ && word.find('\n') == std::string_view::npos) shutdown();
    ++failures_;
    return unknown_analysis(word);
  }
  Analysis out = parse_tagger_response(line);
  if (out.empty() || !reconstructs(word, out)) {
    ++failures_;
    return unknown_analysis(word);
  }
  return out;
}

TaggerFactory external_tagger_factory(std::string command) {
  return [command]() -> std::unique_ptr<Tagger> { return std::make_unique<ExternalTagger>(command); };
}

}  // namespace kagaskit::pos
