#pragma once

#include <map>
#include <optional>
#include <string>

#include "previse/classifier.hpp"
#include "previse/metrics.hpp"
#include "previse/sampler.hpp"
#include "previse/types.hpp"

namespace previse {

// Flat `key = value` config file; '#' starts a comment. Later assignments and
// command-line overrides win. The effective map hashes into the run reports.
class ConfigMap {
 public:
  static ConfigMap parse_file(const std::string& path);
  static ConfigMap parse_text(std::string_view text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;

  std::string canonical_text() const;  // sorted key=value lines
  std::uint64_t hash() const;          // canonical text minus `jobs`

  const std::map<std::string, std::string>& entries() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

// Typed view of the settings the commands share.
struct RunConfig {
  std::string train_path;
  std::string valid_path;
  std::string test_path;
  std::string out_dir = "out";

  std::size_t vocab_max_size = 0;
  int lm_order = 3;
  double lm_discount = 0.75;
  int eval_lm_order = 4;  // separate scoring model for result NLL

  SynthConfig synth;
  std::size_t synth_train_examples = 12000;
  std::size_t synth_valid_examples = 1500;

  ClassifierConfig clf;
  SamplerConfig sampler;
  MetricSelections metrics;

  std::uint64_t seed = 1234;
  int jobs = 1;

  static RunConfig from_map(const ConfigMap& map);

  // Model artifact paths inside out_dir.
  std::string vocab_path() const { return out_dir + "/vocab.txt"; }
  std::string flm_path() const { return out_dir + "/lm_forward.bin"; }
  std::string blm_path() const { return out_dir + "/lm_backward.bin"; }
  std::string eval_lm_path() const { return out_dir + "/lm_eval.bin"; }
  std::string classifier_path() const { return out_dir + "/classifier.bin"; }
  std::string synth_train_path() const { return out_dir + "/synth_train.txt"; }
  std::string synth_valid_path() const { return out_dir + "/synth_valid.txt"; }
};

}  // namespace previse
