#pragma once

// Tagger backed by a child process speaking a line protocol:
//   request  = word + '\n'
//   response = surface<TAB>lemma<TAB>tag( surface<TAB>lemma<TAB>tag)* + '\n'
// An empty response, an unparsable one, or one whose surfaces do not
// reconstruct the word degrades that word to a single UNKNOWN morpheme.

#include <stdexcept>
#include <string>
#include <string_view>
#include <sys/types.h>

#include "kagaskit/pos.hpp"

namespace kagaskit::pos {

class TaggerProcessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExternalTagger final : public Tagger {
 public:
  // Runs `command` through /bin/sh -c. Throws TaggerProcessError when the
  // process cannot be started.
  explicit ExternalTagger(std::string command);
  ~ExternalTagger() override;
  ExternalTagger(const ExternalTagger&) = delete;
  ExternalTagger& operator=(const ExternalTagger&) = delete;

  Analysis tag_word(std::string_view word) override;

  // Words that fell back to UNKNOWN because of the process or its reply.
  std::size_t failures() const { return failures_; }
  bool alive() const { return alive_; }

 private:
  bool read_line(std::string& line);
  void shutdown();

  std::string command_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  bool alive_ = false;
  std::string buffer_;
  std::size_t failures_ = 0;
};

// Parses one response line; empty result on malformed input.
Analysis parse_tagger_response(std::string_view line);

TaggerFactory external_tagger_factory(std::string command);

}  // namespace kagaskit::pos
