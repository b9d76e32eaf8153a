#pragma once

#include <optional>
#include <string>
#include <vector>

#include "previse/rng.hpp"
#include "previse/types.hpp"
#include "previse/vocab.hpp"

namespace previse {

enum class Split { Train, Valid, Test };

struct Corpus {
  std::vector<IdSeq> sentences;  // encoded, no BOS/EOS framing
  Split split = Split::Train;
};

// Splits a line on Unicode whitespace. Input is UTF-8; invalid bytes are
// treated as ordinary characters.
std::vector<std::string> tokenize(std::string_view line);

// Raw tokenized lines, blank lines skipped. Used for vocabulary building.
std::vector<std::vector<std::string>> load_token_lines(const std::string& path);

Corpus load_corpus(const std::string& path, const Vocabulary& vocab,
                   Split split);

// k tokens sampled from distinct positions of one test sentence, original
// order kept. Specials and out-of-vocabulary tokens are never picked. Source
// sentences are drawn without replacement; also returns each set's source
// sentence for reference-based evaluation.
struct ConstraintSet {
  IdSeq tokens;
  IdSeq source;  // sentence the tokens came from
};
std::vector<ConstraintSet> make_constraint_sets(const Corpus& corpus, int k,
                                                int n_sets, std::uint64_t seed);

// Alternating fixed token runs and blanks. Blanks carry no length hint.
struct Template {
  struct Segment {
    bool is_blank = false;
    IdSeq tokens;  // empty iff is_blank
  };
  std::vector<Segment> segments;

  IdSeq fixed_tokens() const;
  std::size_t blank_count() const;
};

enum class MaskStrategy { Middle, Random };

MaskStrategy parse_mask_strategy(std::string_view name);

// Removes ceil(ratio*n) tokens from a sentence: either the central contiguous
// run or random positions (adjacent removals merge into one blank).
Template make_template(const IdSeq& sentence, MaskStrategy strategy,
                       double ratio, Rng& rng);

struct TemplateExample {
  Template tpl;
  IdSeq reference;  // the unmasked source sentence
};

// One template per eligible corpus sentence (>= 2 tokens), in corpus order.
std::vector<TemplateExample> make_templates(const Corpus& corpus,
                                            MaskStrategy strategy, double ratio,
                                            std::uint64_t seed);

// Text form: tokens and the literal blank marker "__", space separated.
// Adjacent markers parse as a single blank.
inline constexpr std::string_view kBlankMarker = "__";
Template parse_template(std::string_view line, const Vocabulary& vocab);
std::string format_template(const Template& tpl, const Vocabulary& vocab);

}  // namespace previse
