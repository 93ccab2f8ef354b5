#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "absa/corpus/schema.hpp"

namespace absa::corpus {

// Planted-keyword corpus: every annotation plants adjacent
// (category keyword, sentiment token) phrases drawn from disjoint lexicons,
// surrounded by background noise, so classes are learnable by construction.
struct SynthSpec {
  std::size_t n_reviews = 0;
  // counts[category][0] = negative, counts[category][1] = positive
  std::array<std::array<std::uint32_t, 2>, kNumCategories> counts{};

  std::uint32_t background_vocab = 200;
  std::uint32_t keywords_per_category = 8;
  std::uint32_t sentiment_tokens_per_polarity = 8;
  std::uint32_t min_background = 4;
  std::uint32_t max_background = 10;
  std::uint32_t phrases_per_annotation = 2;
  std::string id_prefix = "r";
};

// The paper-reported per-class train/test distribution, as generator targets.
SynthSpec table2_spec(std::string_view split);  // "train" or "test"

// JSON spec file for the CLI; unknown or invalid fields raise ConfigError
// naming the field.
SynthSpec parse_synth_spec(const std::filesystem::path& path);

// Deterministic for a given (spec, seed); per-class counts match the spec
// exactly.
Dataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed);

}  // namespace absa::corpus
