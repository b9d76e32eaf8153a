#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "previse/ngram_lm.hpp"
#include "previse/types.hpp"

namespace previse {

// Corpus-level BLEU with one reference per hypothesis: clipped modified
// n-gram precisions, uniform weights, brevity penalty min(1, e^{1 - r/h}).
// A zero precision at n >= 2 falls back to (matches+1)/(total+1); a zero
// unigram precision makes the score 0. Returns a percentage in [0, 100].
double corpus_bleu(const std::vector<IdSeq>& hypotheses,
                   const std::vector<IdSeq>& references, int max_n,
                   bool use_brevity_penalty = true);

// Mean over sentences of sentence-BLEU against all other sentences as the
// reference set (brevity penalty on). Needs at least two sentences.
double self_bleu(const std::vector<IdSeq>& sentences, int max_n);

// Distinct n-gram types / total n-gram occurrences, over the whole set.
double distinct_n(const std::vector<IdSeq>& sentences, int n);

// Shannon entropy (nats) of the n-gram frequency distribution.
double entropy_n(const std::vector<IdSeq>& sentences, int n);

// A sentence repeats if any unigram occurs more than 3 times, any bigram
// more than twice, or any trigram more than once. Returns the fraction of
// repeating sentences.
double repetition_rate(const std::vector<IdSeq>& sentences);

struct MetricSelections {
  int bleu_n = 4;
  int self_bleu_n = 4;
  int distinct_n = 2;
  int entropy_n = 4;
  bool include_no_bp_bleu = false;  // extra BLEU column without the penalty
};

struct MetricReport {
  std::size_t sample_count = 0;
  std::optional<double> mean_nll;       // eval model required
  std::optional<double> bleu;           // references required
  std::optional<double> bleu_no_bp;
  std::optional<double> self_bleu;      // >= 2 samples required
  double distinct;
  double entropy;
  double repetition;
  MetricSelections selections;

  std::map<std::string, double> as_map() const;
  std::string text_table() const;
};

MetricReport assemble_report(const std::vector<IdSeq>& hypotheses,
                             const std::vector<IdSeq>* references,
                             const NGramLM* eval_lm,
                             const MetricSelections& sel);

}  // namespace previse
