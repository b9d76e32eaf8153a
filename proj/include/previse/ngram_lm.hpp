#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "previse/corpus.hpp"
#include "previse/types.hpp"
#include "previse/vocab.hpp"

namespace previse {

enum class Direction { Forward, Backward };

// Count-based n-gram model with interpolated absolute discounting:
//
//   P(w | c) = max(count(c,w) - d, 0) / count(c) + lambda(c) * P(w | c'),
//   lambda(c) = d * distinct(c) / count(c),
//
// where c' drops the oldest context token and the recursion bottoms out at
// the uniform distribution 1/|V|. Unseen contexts pass through to the next
// shorter level. The distribution covers the full vocabulary (specials
// included) and sums to one for every context.
//
// A backward model is the same machinery trained on reversed token sequences;
// its context arguments are suffixes in natural sentence order, reversed
// internally. Trained models are immutable and safe for shared concurrent
// reads.
class NGramLM {
 public:
  static NGramLM train(const Corpus& corpus, const Vocabulary& vocab,
                       int order, Direction direction, double discount);

  int order() const { return order_; }
  Direction direction() const { return direction_; }
  double discount() const { return discount_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::uint64_t vocab_hash() const { return vocab_hash_; }

  // log P(token | context). For a forward model the context is the tokens to
  // the left in natural order (a leading BOS frame is accepted); for a
  // backward model it is the tokens to the right in natural order (a trailing
  // EOS frame is accepted). Missing history is padded with BOS, which doubles
  // as the start frame of the reversed stream.
  double log_prob(TokenId token, std::span<const TokenId> context) const;

  // Full next-token distribution for a context; entries sum to one.
  std::vector<double> next_token_dist(std::span<const TokenId> context) const;

  // Total log probability of a framed sentence (BOS ... EOS). Every content
  // token and the final EOS are scored; BOS is frame only.
  double sentence_log_prob(std::span<const TokenId> framed) const;

  // -sentence_log_prob / (#content tokens + 1), the EOS transition included.
  double nll_per_token(std::span<const TokenId> framed) const;

  void save(const std::string& path) const;
  static NGramLM load(const std::string& path, const Vocabulary& vocab);

 private:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::vector<std::pair<TokenId, std::uint32_t>> items;  // sorted by token

    std::uint32_t count_of(TokenId t) const;
  };

  // Context key: up to kMaxOrder-1 ids, inline, no allocation on lookup.
  static constexpr int kMaxOrder = 8;
  struct Key {
    std::uint8_t len = 0;
    std::array<TokenId, kMaxOrder - 1> ids{};
    bool operator==(const Key& o) const {
      if (len != o.len) return false;
      for (int i = 0; i < len; ++i)
        if (ids[i] != o.ids[i]) return false;
      return true;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      h = (h ^ k.len) * 0x100000001b3ULL;
      for (int i = 0; i < k.len; ++i) {
        h = (h ^ static_cast<std::uint64_t>(
                     static_cast<std::uint32_t>(k.ids[i]))) *
            0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  using Level = std::unordered_map<Key, ContextCounts, KeyHash>;

  NGramLM() = default;

  // Normalizes a caller context (strips frame tokens, reverses for backward
  // models, pads with BOS) into the final order-1 window.
  Key normalize_context(std::span<const TokenId> context) const;
  const ContextCounts* find(const Key& key, int level) const;
  double prob_from_key(TokenId token, const Key& key) const;
  void count_sequence(std::span<const TokenId> content);

  int order_ = 3;
  Direction direction_ = Direction::Forward;
  double discount_ = 0.75;
  std::size_t vocab_size_ = 0;
  std::uint64_t vocab_hash_ = 0;
  std::vector<Level> levels_;  // levels_[k]: contexts of length k
};

// Mean per-sentence nll_per_token over a corpus under the given model.
double eval_nll(const NGramLM& lm, const Corpus& corpus);

}  // namespace previse
