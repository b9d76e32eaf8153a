#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace previse {

using TokenId = std::int32_t;
using IdSeq = std::vector<TokenId>;

enum class Action { Replace, Insert, Delete };

inline const char* action_name(Action a) {
  switch (a) {
    case Action::Replace: return "replace";
    case Action::Insert: return "insert";
    case Action::Delete: return "delete";
  }
  return "?";
}

// Which language-model signals the candidate generator combines.
enum class GeneratorMode { Forward, Backward, Combined };

// How the sampler draws (action, position) each step.
enum class PriorMode { Classifier, Uniform, UniformActions, UniformPositions };

inline const char* prior_mode_name(PriorMode m) {
  switch (m) {
    case PriorMode::Classifier: return "classifier";
    case PriorMode::Uniform: return "uniform";
    case PriorMode::UniformActions: return "uniform-actions";
    case PriorMode::UniformPositions: return "uniform-positions";
  }
  return "?";
}

inline const char* generator_mode_name(GeneratorMode m) {
  switch (m) {
    case GeneratorMode::Forward: return "forward";
    case GeneratorMode::Backward: return "backward";
    case GeneratorMode::Combined: return "combined";
  }
  return "?";
}

PriorMode parse_prior_mode(std::string_view name);
GeneratorMode parse_generator_mode(std::string_view name);

struct ActionSet {
  bool replace = true;
  bool insert = true;
  bool del = false;

  bool any() const { return replace || insert || del; }
  bool contains(Action a) const {
    switch (a) {
      case Action::Replace: return replace;
      case Action::Insert: return insert;
      case Action::Delete: return del;
    }
    return false;
  }
};

ActionSet parse_action_set(std::string_view csv);
std::string action_set_name(const ActionSet& s);

inline double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v);

}  // namespace previse
