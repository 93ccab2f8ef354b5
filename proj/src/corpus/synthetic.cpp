#include "absa/corpus/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "absa/util/errors.hpp"
#include "absa/util/fileio.hpp"
#include "absa/util/rng.hpp"

namespace absa::corpus {

namespace {

using json = nlohmann::json;

// Lexicons are derived from a fixed internal seed, independent of the corpus
// seed, so every generated corpus shares one token universe.
constexpr std::uint64_t kLexiconSeed = 0x5EED0A5Bu;

struct Lexicons {
  std::array<std::vector<std::string>, kNumCategories> category_keywords;
  std::array<std::vector<std::string>, 2> sentiment;  // [0]=negative, [1]=positive
  std::vector<std::string> background;
};

std::string make_word(util::Rng& rng, std::unordered_set<std::string>& used) {
  static const std::vector<std::string> syllables = {
      "با", "بی", "تا", "جا", "خو", "دا", "دی", "را", "رو", "زی",
      "سا", "سو", "شا", "فر", "کا", "کو", "گا", "لا", "ما", "مو",
      "نا", "نی", "ها", "هو", "پا", "پی", "چا", "دل", "سر", "گل"};
  for (;;) {
    const std::size_t len = 2 + rng.uniform_int(3);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) {
      w += syllables[rng.uniform_int(syllables.size())];
    }
    if (used.insert(w).second) return w;
  }
}

Lexicons build_lexicons(const SynthSpec& spec) {
  util::Rng rng(kLexiconSeed);
  std::unordered_set<std::string> used;
  Lexicons lex;
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    for (std::uint32_t j = 0; j < spec.keywords_per_category; ++j) {
      lex.category_keywords[c].push_back(make_word(rng, used));
    }
  }
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::uint32_t j = 0; j < spec.sentiment_tokens_per_polarity; ++j) {
      lex.sentiment[p].push_back(make_word(rng, used));
    }
  }
  for (std::uint32_t j = 0; j < spec.background_vocab; ++j) {
    lex.background.push_back(make_word(rng, used));
  }
  return lex;
}

void validate(const SynthSpec& spec) {
  if (spec.keywords_per_category < 1) throw ConfigError("keywords_per_category must be >= 1");
  if (spec.sentiment_tokens_per_polarity < 1) {
    throw ConfigError("sentiment_tokens_per_polarity must be >= 1");
  }
  if (spec.background_vocab < 1) throw ConfigError("background_vocab must be >= 1");
  if (spec.max_background < spec.min_background) {
    throw ConfigError("max_background must be >= min_background");
  }
  if (spec.phrases_per_annotation < 1) throw ConfigError("phrases_per_annotation must be >= 1");
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    const std::uint64_t total =
        std::uint64_t(spec.counts[c][0]) + std::uint64_t(spec.counts[c][1]);
    if (total > spec.n_reviews) {
      throw ConfigError("counts: category '" + std::string(category_names()[c]) +
                        "' needs " + std::to_string(total) + " reviews but n_reviews is " +
                        std::to_string(spec.n_reviews));
    }
  }
}

}  // namespace

SynthSpec table2_spec(std::string_view split) {
  SynthSpec spec;
  if (split == "train") {
    spec.n_reviews = 2000;
    const std::uint32_t pos[kNumCategories] = {152, 200, 61, 59, 907, 61, 38, 56, 77};
    const std::uint32_t neg[kNumCategories] = {67, 110, 72, 68, 831, 111, 109, 69, 62};
    for (std::size_t c = 0; c < kNumCategories; ++c) {
      spec.counts[c][0] = neg[c];
      spec.counts[c][1] = pos[c];
    }
  } else if (split == "test") {
    spec.n_reviews = 200;
    const std::uint32_t pos[kNumCategories] = {11, 17, 5, 16, 85, 7, 7, 9, 7};
    const std::uint32_t neg[kNumCategories] = {9, 7, 7, 3, 61, 8, 14, 6, 5};
    for (std::size_t c = 0; c < kNumCategories; ++c) {
      spec.counts[c][0] = neg[c];
      spec.counts[c][1] = pos[c];
    }
  } else {
    throw ConfigError("unknown table2 split '" + std::string(split) +
                      "' (expected train or test)");
  }
  return spec;
}

SynthSpec parse_synth_spec(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(util::read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError("synth spec: invalid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("synth spec: top level must be an object");

  SynthSpec spec;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_reviews") {
      spec.n_reviews = value.get<std::size_t>();
    } else if (key == "counts") {
      if (!value.is_object()) throw ConfigError("synth spec: 'counts' must be an object");
      for (const auto& [cat_name, polarities] : value.items()) {
        const auto cat = category_index(cat_name);
        if (!cat) throw ConfigError("synth spec: counts: unknown category '" + cat_name + "'");
        if (!polarities.is_object()) {
          throw ConfigError("synth spec: counts." + cat_name + " must be an object");
        }
        for (const auto& [pol_name, count] : polarities.items()) {
          std::size_t slot;
          if (pol_name == "negative") {
            slot = 0;
          } else if (pol_name == "positive") {
            slot = 1;
          } else {
            throw ConfigError("synth spec: counts." + cat_name + ": unknown polarity '" +
                              pol_name + "'");
          }
          spec.counts[*cat][slot] = count.get<std::uint32_t>();
        }
      }
    } else if (key == "background_vocab") {
      spec.background_vocab = value.get<std::uint32_t>();
    } else if (key == "keywords_per_category") {
      spec.keywords_per_category = value.get<std::uint32_t>();
    } else if (key == "sentiment_tokens_per_polarity") {
      spec.sentiment_tokens_per_polarity = value.get<std::uint32_t>();
    } else if (key == "min_background") {
      spec.min_background = value.get<std::uint32_t>();
    } else if (key == "max_background") {
      spec.max_background = value.get<std::uint32_t>();
    } else if (key == "phrases_per_annotation") {
      spec.phrases_per_annotation = value.get<std::uint32_t>();
    } else if (key == "id_prefix") {
      spec.id_prefix = value.get<std::string>();
    } else {
      throw ConfigError("synth spec: unknown field '" + key + "'");
    }
  }
  return spec;
}

Dataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed) {
  validate(spec);
  const Lexicons lex = build_lexicons(spec);
  util::Rng rng(seed);

  // Assign (category, polarity) annotations to review slots.
  std::vector<std::vector<Annotation>> assigned(spec.n_reviews);
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    std::vector<std::size_t> slots(spec.n_reviews);
    std::iota(slots.begin(), slots.end(), 0);
    rng.shuffle(slots);
    std::size_t k = 0;
    for (std::uint32_t j = 0; j < spec.counts[c][1]; ++j, ++k) {
      assigned[slots[k]].push_back(
          {static_cast<std::uint8_t>(c), Polarity::kPositive});
    }
    for (std::uint32_t j = 0; j < spec.counts[c][0]; ++j, ++k) {
      assigned[slots[k]].push_back(
          {static_cast<std::uint8_t>(c), Polarity::kNegative});
    }
  }

  const int id_width = spec.n_reviews > 0
                           ? static_cast<int>(std::to_string(spec.n_reviews - 1).size())
                           : 1;

  Dataset ds;
  ds.split = "synthetic";
  ds.reviews.reserve(spec.n_reviews);
  for (std::size_t i = 0; i < spec.n_reviews; ++i) {
    std::vector<Annotation>& annotations = assigned[i];
    std::sort(annotations.begin(), annotations.end());

    // Each unit stays contiguous after shuffling, keeping keyword and
    // sentiment token adjacent (within one convolution window).
    std::vector<std::vector<std::string>> units;
    for (const Annotation& a : annotations) {
      const auto& kws = lex.category_keywords[a.category];
      const auto& sents = lex.sentiment[a.polarity == Polarity::kPositive ? 1 : 0];
      for (std::uint32_t p = 0; p < spec.phrases_per_annotation; ++p) {
        units.push_back({kws[rng.uniform_int(kws.size())],
                         sents[rng.uniform_int(sents.size())]});
      }
    }
    const std::uint32_t n_bg =
        spec.min_background +
        static_cast<std::uint32_t>(
            rng.uniform_int(spec.max_background - spec.min_background + 1));
    for (std::uint32_t b = 0; b < n_bg; ++b) {
      units.push_back({lex.background[rng.uniform_int(lex.background.size())]});
    }
    rng.shuffle(units);

    std::string text;
    for (const auto& unit : units) {
      for (const std::string& tok : unit) {
        if (!text.empty()) text += ' ';
        text += tok;
      }
    }

    Review r;
    std::string num = std::to_string(i);
    r.id = spec.id_prefix + std::string(id_width - static_cast<int>(num.size()), '0') + num;
    r.text = std::move(text);
    r.annotations = std::move(annotations);
    ds.reviews.push_back(std::move(r));
  }
  return ds;
}

}  // namespace absa::corpus
