#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entp/oracles/oracles.hpp"

namespace entp::tasks {

using oracle::Token;
using oracle::TokenSequence;

enum class TripletTask { kCount, kIdentify, kPair };

std::string task_name(TripletTask task);
// "tc", "ti", "pc".
TripletTask parse_triplet_task(const std::string& name);

struct TripletSpec {
  TripletTask task = TripletTask::kCount;
  std::size_t seed_len = 16;
  std::size_t total_len = 64;
  Token vocab = 64;  // seed tokens are uniform over [0, vocab)

  void validate() const;
  // Smallest vocabulary covering every token the sequences can hold.
  Token model_vocab() const;
};

// Defaults per task; identification uses vocabulary 128.
TripletSpec default_triplet_spec(TripletTask task);

Token triplet_next(TripletTask task, std::span<const Token> prefix);

TokenSequence make_triplet_sequence(const TripletSpec& spec, std::mt19937_64& rng);
std::vector<TokenSequence> gen_triplet_sequences(std::size_t count, const TripletSpec& spec, std::uint64_t seed);

// True iff every post-seed token equals the oracle on its prefix.
bool verify_triplet_sequence(const TripletSpec& spec, const TokenSequence& seq);

// Fresh sequences on demand for training.
class TripletStream {
 public:
  TripletStream(TripletSpec spec, std::uint64_t seed) : spec_(spec), rng_(seed) { spec_.validate(); }
  TokenSequence next() { return make_triplet_sequence(spec_, rng_); }
  std::vector<TokenSequence> next_batch(std::size_t n);
  const TripletSpec& spec() const { return spec_; }

 private:
  TripletSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace entp::tasks
