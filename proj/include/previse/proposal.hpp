#pragma once

#include <vector>

#include "previse/ngram_lm.hpp"
#include "previse/state.hpp"
#include "previse/types.hpp"

namespace previse {

// Candidate fill tokens for one slot, ranked by the generator score: the
// product of forward and backward next-token probabilities (or a single
// factor, per mode). Specials are never proposed.
struct ScoredToken {
  TokenId token;
  double log_score;  // log of the generator score, not a normalized prob
};

// Replacement-slot ranking at position pos of a framed sentence: forward
// context ids[0..pos), backward context ids(pos..]. Returns at most k tokens,
// score descending, ties by ascending id.
std::vector<ScoredToken> top_k_tokens(const NGramLM& flm, const NGramLM& blm,
                                      std::span<const TokenId> framed,
                                      std::size_t pos, std::size_t k,
                                      GeneratorMode mode);

// Insertion-slot ranking for the gap before position pos: forward context
// ids[0..pos), backward context ids[pos..] (the suffix the new token will
// precede).
std::vector<ScoredToken> top_k_insertion_tokens(
    const NGramLM& flm, const NGramLM& blm, std::span<const TokenId> framed,
    std::size_t pos, std::size_t k, GeneratorMode mode);

struct Candidate {
  TokenId token;      // -1 for the deletion candidate
  IdSeq ids;          // full framed sentence after the edit
  double log_prob;    // forward-model sentence log probability
  double log_score;   // generator score used for ranking
};

struct CandidateSet {
  Action action;
  std::size_t position;
  std::vector<Candidate> candidates;     // score descending, ties by token id
  std::vector<double> probs;             // normalized over candidates
  double log_prob_sum = 0.0;             // log sum of candidate sentence probs
};

// Replacement candidates at a non-protected content position. The incumbent
// token is always present, displacing the weakest entry when it falls outside
// the top k, so the chain can stand still.
CandidateSet build_replacement_set(const NGramLM& flm, const NGramLM& blm,
                                   const SentenceState& st, std::size_t pos,
                                   std::size_t k, GeneratorMode mode);

// Insertion candidates before position pos (1 <= pos <= EOS index). Backward
// context includes ids[pos..].
CandidateSet build_insertion_set(const NGramLM& flm, const NGramLM& blm,
                                 const SentenceState& st, std::size_t pos,
                                 std::size_t k, GeneratorMode mode);

// The single candidate that removes the token at pos.
CandidateSet build_deletion_set(const NGramLM& flm, const SentenceState& st,
                                std::size_t pos);

// Exact single-slot conditional q(x_pos = w | rest) over the full vocabulary,
// each entry proportional to the forward-model probability of the sentence
// with w substituted at pos. Brute force; test oracle and small-scale tool.
std::vector<double> gibbs_conditional_exact(const NGramLM& flm,
                                            std::span<const TokenId> framed,
                                            std::size_t pos);

}  // namespace previse
