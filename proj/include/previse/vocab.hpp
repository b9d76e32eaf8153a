#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "previse/types.hpp"

namespace previse {

// Token inventory with four reserved specials at fixed ids. Ids are
// contiguous, the token<->id mapping is a bijection, and no regular token may
// collide with a special surface form.
class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kMask = 2;
  static constexpr TokenId kUnk = 3;
  static constexpr TokenId kNumSpecials = 4;

  static const std::array<std::string, 4>& special_forms();

  // Frequency-ranked build over tokenized sentences; ties broken by first
  // occurrence. max_size caps the total size including specials (0 = no cap).
  static Vocabulary build(const std::vector<std::vector<std::string>>& sentences,
                          std::size_t max_size = 0);

  // Specials plus the given regular tokens, in order. For tests and tools.
  static Vocabulary from_tokens(const std::vector<std::string>& regular);

  std::size_t size() const { return id_to_token_.size(); }

  TokenId id_of(std::string_view token) const;  // kUnk when absent
  const std::string& token(TokenId id) const;   // throws on out-of-range
  bool contains(std::string_view token) const;

  static bool is_special(TokenId id) { return id >= 0 && id < kNumSpecials; }

  IdSeq encode(const std::vector<std::string>& tokens) const;
  std::vector<std::string> decode(std::span<const TokenId> ids) const;
  std::string decode_to_string(std::span<const TokenId> ids) const;

  // FNV-1a over all surface forms in id order; identifies the vocabulary in
  // every persisted artifact.
  std::uint64_t hash() const { return hash_; }

  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);

 private:
  Vocabulary() = default;
  void finish();  // builds the reverse map and the hash

  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, TokenId> token_to_id_;
  std::uint64_t hash_ = 0;
};

}  // namespace previse
