#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "previse/classifier.hpp"
#include "previse/ngram_lm.hpp"
#include "previse/proposal.hpp"
#include "previse/rng.hpp"
#include "previse/state.hpp"
#include "previse/types.hpp"

namespace previse {

struct Models {
  const NGramLM* flm = nullptr;
  const NGramLM* blm = nullptr;
  const TokenClassifier* classifier = nullptr;  // required by learned priors
};

struct SamplerConfig {
  int steps = 200;
  int k_candidates = 50;
  PriorMode prior_mode = PriorMode::Classifier;
  ActionSet actions;  // default: replace + insert
  GeneratorMode generator = GeneratorMode::Combined;
  int max_length = 64;  // content tokens; longer proposals are auto-rejected
  std::uint64_t seed = 0;
};

struct ChainStep {
  int t = 0;
  std::optional<Action> action;  // nullopt: no legal move this step
  std::size_t position = 0;
  TokenId proposed_token = -1;
  std::size_t proposed_length = 0;  // content length of the proposal
  double acceptance = 0.0;          // the ratio A, clamped to [0, 1]
  double alpha = 0.0;               // uniform draw; accepted iff alpha < A
  bool accepted = false;
  bool moved = false;               // accepted and the sentence changed; a
                                    // replacement redrawing the incumbent
                                    // token is accepted but does not move
  double nll = 0.0;                 // per-token NLL of the post-step state
};

struct ActionStats {
  std::int64_t proposed = 0;
  std::int64_t accepted = 0;  // alpha < A
  std::int64_t moved = 0;     // accepted and state changed

  double rate() const {
    return proposed == 0 ? 0.0
                         : static_cast<double>(accepted) /
                               static_cast<double>(proposed);
  }
  // Replacement is a full-conditional resample (A = 1), so its accept rate
  // is always 1; the share of steps that actually changed the sentence is
  // the informative statistic there.
  double move_rate() const {
    return proposed == 0 ? 0.0
                         : static_cast<double>(moved) /
                               static_cast<double>(proposed);
  }
};

struct AcceptanceSummary {
  ActionStats replace;
  ActionStats insert;
  ActionStats del;
  std::int64_t no_move_steps = 0;

  ActionStats& of(Action a);
  const ActionStats& of(Action a) const;
  void add(const AcceptanceSummary& other);
};

struct ChainResult {
  IdSeq best_ids;      // framed; lowest per-token NLL among visited states
  double best_nll = 0.0;
  double initial_nll = 0.0;
  std::vector<ChainStep> trace;
  AcceptanceSummary acceptance;
  std::uint64_t seed = 0;
};

// Observer sees the state *after* each step's accept/reject decision. With
// run_batch and jobs > 1 it is invoked from worker threads concurrently, so
// it must be thread-safe (or jobs kept at 1).
using StepObserver =
    std::function<void(const SentenceState&, const ChainStep&)>;

// One transition. Draws (action, position) from the prior, proposes from the
// candidate set, and accepts with
//   replace: A = 1 (full-conditional resample),
//   insert:  A = min(1, sum_{X in S} p(X) / p(X_t)),
//   delete:  A = min(1, p(X') / sum_{X in S'} p(X)), S' the insertion set
//            rebuilt at the deleted slot of X'.
// Proposals beyond max_length are rejected outright.
ChainStep step(SentenceState& state, const Models& models,
               const SamplerConfig& config, int t, Rng& rng);

// The bare accept/reject draw used by step(); exposed for calibration tests.
bool mh_accept(double acceptance, Rng& rng, double* alpha_out = nullptr);

ChainResult run_chain(const SentenceState& init, const Models& models,
                      const SamplerConfig& config,
                      const StepObserver& observer = nullptr);

// Independent chains, one per input; chain i uses the RNG stream derived from
// (config.seed, i), so results do not depend on the parallelism degree.
std::vector<ChainResult> run_batch(const std::vector<SentenceState>& inputs,
                                   const Models& models,
                                   const SamplerConfig& config, int jobs = 1,
                                   const StepObserver& observer = nullptr);

}  // namespace previse
