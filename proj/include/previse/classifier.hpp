#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "previse/corpus.hpp"
#include "previse/ngram_lm.hpp"
#include "previse/rng.hpp"
#include "previse/state.hpp"
#include "previse/types.hpp"

namespace previse {

// Per-token edit labels: 0 copy, 1 replace, 2 insert-before, 3 delete.
enum : std::uint8_t {
  kLabelCopy = 0,
  kLabelReplace = 1,
  kLabelInsert = 2,
  kLabelDelete = 3,
};
inline constexpr int kNumLabels = 4;
extern const std::array<std::string, kNumLabels> kLabelNames;

struct LabeledSentence {
  IdSeq ids;                         // BOS ... EOS
  std::vector<std::uint8_t> labels;  // same length

  void validate() const;  // shape + label placement rules
};

struct SynthConfig {
  int top_n = 20;                  // pool size for model-guided token draws
  double masked_fraction = 5.0 / 6.0;  // model-guided vs uniform token source
  int max_edits = 3;               // edits per example, drawn from [1, max]
  int min_segment = 4;
  int max_segment = 24;
  // Relative frequency of the three perturbation families. Deletion examples
  // are the only source of segment-boundary insert labels, so they usually
  // get extra weight.
  double delete_weight = 1.0;
  double replace_weight = 1.0;
  double insert_weight = 1.0;
  std::uint64_t seed = 1;
};

// Applied edit, kept so tests can invert an example back to its source.
struct SynthEdit {
  Action kind;
  std::size_t pos;        // position in the emitted framed example
  TokenId original = -1;  // replaced or deleted token
  TokenId inserted = -1;  // replacement or inserted token
};

struct SynthExample {
  LabeledSentence data;
  IdSeq segment;                // source segment, unframed, pre-edit
  bool left_context_cut = false;
  bool right_context_cut = false;
  std::vector<SynthEdit> edits;
  bool model_guided = false;    // token draws came from the LM pool
};

// Builds n_examples training pairs from sentences sampled (with replacement)
// out of the corpus. Each example takes a contiguous segment, frames it with
// BOS/EOS, and applies one perturbation family:
//   delete tokens  -> surviving successors (and tokens whose predecessor
//                     context was cut away, including the segment edges)
//                     get label 2;
//   replace tokens -> label 1 at the replaced positions;
//   insert tokens  -> label 3 on the inserted tokens.
// Replacement/insertion tokens come from a uniform draw over regular tokens
// or from the top-N of the forward*backward model distribution, per config.
// Deterministic per (config.seed, example index); jobs only changes wall
// time.
std::vector<SynthExample> gen_synthetic(const Corpus& corpus,
                                        const NGramLM& flm, const NGramLM& blm,
                                        const SynthConfig& config,
                                        std::size_t n_examples, int jobs = 1);

// Two parallel lines per example (tokens, labels), blank-line separated.
void save_synthetic(const std::string& path,
                    const std::vector<LabeledSentence>& examples,
                    const Vocabulary& vocab);
std::vector<LabeledSentence> load_synthetic(const std::string& path,
                                            const Vocabulary& vocab);

struct ClassifierConfig {
  int window = 3;        // neighbor radius
  double learning_rate = 0.2;
  int epochs = 40;
  int batch_size = 32;   // sentences per mini-batch
  double l2 = 1e-6;
  int patience = 6;      // epochs without validation improvement
  std::uint64_t seed = 1;
};

struct LabelScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool degenerate = false;  // no predictions or no gold instances
};

struct ClassifierEval {
  std::array<LabelScore, kNumLabels> per_label;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

// Multinomial log-linear per-token labeler. Features: the token id at each
// offset in [-window, window] (BOS/EOS padding beyond the frame), two frame
// adjacency flags, and a bias. Mini-batch gradient descent on cross-entropy,
// keeping the weights with the best validation macro-F1.
class TokenClassifier {
 public:
  static TokenClassifier train(const std::vector<LabeledSentence>& train_set,
                               const std::vector<LabeledSentence>& valid_set,
                               const ClassifierConfig& config,
                               const Vocabulary& vocab);

  // One distribution over the four labels per position, BOS/EOS included.
  std::vector<std::array<double, kNumLabels>> predict(
      std::span<const TokenId> framed) const;

  int window() const { return window_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::uint64_t vocab_hash() const { return vocab_hash_; }

  void save(const std::string& path) const;
  static TokenClassifier load(const std::string& path,
                              const Vocabulary& vocab);

  // Mean cross-entropy over all tokens of the batch plus 0.5*l2*|w|^2, and
  // its gradient. Exposed for optimizer steps and finite-difference checks.
  static double loss_and_grad(const std::vector<LabeledSentence>& batch,
                              std::span<const double> weights, int window,
                              std::size_t vocab_size, double l2,
                              std::span<double> grad_out);

  static std::size_t feature_count(int window, std::size_t vocab_size);
  std::span<const double> weights() const { return weights_; }

  // For tests that need a hand-built model.
  static TokenClassifier from_weights(std::vector<double> weights, int window,
                                      std::size_t vocab_size,
                                      std::uint64_t vocab_hash);

 private:
  TokenClassifier() = default;

  int window_ = 3;
  std::size_t vocab_size_ = 0;
  std::uint64_t vocab_hash_ = 0;
  std::vector<double> weights_;  // [label][feature], row-major
};

ClassifierEval evaluate_classifier(const TokenClassifier& clf,
                                   const std::vector<LabeledSentence>& data);

// Macro scores of the always-predict-majority-class baseline on `data`.
ClassifierEval majority_baseline(const std::vector<LabeledSentence>& data);

// Joint proposal prior over (action, position): one row per sampled action,
// classifier label mass masked by structural legality and renormalized.
struct PriorTable {
  std::vector<double> replace_probs;       // per position
  std::vector<double> insert_probs;        // per position (insert before)
  std::vector<std::uint8_t> replace_legal;
  std::vector<std::uint8_t> insert_legal;
  std::vector<std::uint8_t> delete_legal;  // delete has no learned row
  bool normalized = false;
  bool uniform_fallback = false;  // no classifier mass survived the mask

  double replace_marginal() const;
  double insert_marginal() const;
};

// classifier == nullptr yields the uniform table over legal pairs. Masking:
// replace is illegal on BOS/EOS/protected tokens; insert is illegal before
// BOS and outside open gaps; actions outside `enabled` are masked entirely.
PriorTable build_prior(const TokenClassifier* classifier,
                       const SentenceState& state, const ActionSet& enabled);

// Draws (action, position) under the given mode; nullopt when no legal pair
// exists. Classifier mode follows the table; the uniform modes flatten the
// action choice, the position choice, or both. Delete can only be drawn by
// the flattened-action modes.
std::optional<std::pair<Action, std::size_t>> sample_action_position(
    const PriorTable& table, PriorMode mode, Rng& rng);

}  // namespace previse
