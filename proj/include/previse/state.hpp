#pragma once

#include <cstdint>
#include <vector>

#include "previse/corpus.hpp"
#include "previse/ngram_lm.hpp"
#include "previse/types.hpp"

namespace previse {

// One point of the chain: a framed sentence, per-token protection flags,
// per-gap insertion permissions, and the cached forward log probability.
// Value semantics: transitions return a new state.
struct SentenceState {
  IdSeq ids;                           // BOS ... EOS
  std::vector<std::uint8_t> protect;   // same length as ids
  std::vector<std::uint8_t> open_gap;  // open_gap[i]: may insert before ids[i];
                                       // index 0 unused (never legal)
  double log_prob = 0.0;               // forward-model score of ids

  std::size_t length() const { return ids.size(); }
  std::size_t content_length() const { return ids.size() - 2; }
  std::size_t eos_index() const { return ids.size() - 1; }
  double nll_per_token() const {
    return -log_prob / static_cast<double>(content_length() + 1);
  }

  bool can_replace(std::size_t i) const {
    return i > 0 && i < eos_index() && !protect[i];
  }
  bool can_insert_before(std::size_t i) const {
    return i > 0 && i <= eos_index() && open_gap[i];
  }
  bool can_delete(std::size_t i) const { return can_replace(i); }
};

// Constraint mode: (BOS, c_1 ... c_k, EOS), all constraints protected, every
// gap open. Constraints must be in-vocabulary non-special tokens.
SentenceState init_constraint_state(const IdSeq& constraints,
                                    const NGramLM& flm);

// Infill mode: fixed template runs protected, insertion allowed only inside
// blanks. Tokens later placed into blanks stay editable.
SentenceState init_template_state(const Template& tpl, const NGramLM& flm);

// Transitions; new_log_prob is the forward score of the resulting sentence.
SentenceState apply_replace(const SentenceState& st, std::size_t pos,
                            TokenId token, double new_log_prob);
SentenceState apply_insert(const SentenceState& st, std::size_t pos,
                           TokenId token, double new_log_prob);
SentenceState apply_delete(const SentenceState& st, std::size_t pos,
                           double new_log_prob);

}  // namespace previse
