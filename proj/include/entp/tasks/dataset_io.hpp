#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "entp/tasks/addition.hpp"
#include "entp/tasks/icl.hpp"
#include "entp/tasks/triplet.hpp"

namespace entp::tasks {

// One sequence per line: seed tokens, a '|', then the continuation.
std::string format_sequence_line(const TokenSequence& seq);
TokenSequence parse_sequence_line(std::string_view line);
void write_sequences(const std::filesystem::path& path, const std::vector<TokenSequence>& seqs);
std::vector<TokenSequence> read_sequences(const std::filesystem::path& path);

// One rendered example per line.
void write_addition(const std::filesystem::path& path, const std::vector<AdditionExample>& examples);
std::vector<AdditionExample> read_addition(const std::filesystem::path& path, AdditionFormat format);

// Header "# icl class=<name> dim=<d> points=<N> fields=<N*d+N>", then one
// line per prompt: the N*d inputs followed by the N targets.
void write_icl(const std::filesystem::path& path, const IclSpec& spec, const std::vector<IclPrompt>& prompts);

// Character-level corpus for language-model plumbing.
struct CharCorpus {
  std::string alphabet;  // sorted distinct characters; id = index
  std::vector<int> ids;

  static CharCorpus from_text(std::string_view text);
  static CharCorpus from_file(const std::filesystem::path& path);
  std::size_t vocab_size() const { return alphabet.size(); }
  std::string decode(std::span<const int> ids) const;
  // Contiguous windows of `len` tokens, stepping by `stride`.
  std::vector<std::vector<int>> windows(std::size_t len, std::size_t stride) const;
};

}  // namespace entp::tasks
