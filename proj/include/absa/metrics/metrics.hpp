#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "absa/corpus/schema.hpp"

namespace absa::metrics {

using corpus::kNumCategories;
using corpus::Polarity;

// The 18 composite labels: 9 categories x {negative, positive}, enumerated
// category-major with negative before positive.
inline constexpr std::size_t kNumLabels = kNumCategories * 2;

struct CompositeLabel {
  std::uint8_t category = 0;
  Polarity polarity = Polarity::kNegative;

  friend bool operator==(const CompositeLabel&, const CompositeLabel&) = default;
  friend auto operator<=>(const CompositeLabel&, const CompositeLabel&) = default;
};

std::size_t label_index(const CompositeLabel& l);
CompositeLabel label_at(std::size_t index);
std::string label_name(const CompositeLabel& l);  // "Movie/positive"

// Set of composite labels for one review; at most one polarity per category
// by construction (stored as the per-category decision).
class PredictionSet {
 public:
  PredictionSet() { classes_.fill(Polarity::kNeutral); }

  static PredictionSet from_classes(const std::array<Polarity, kNumCategories>& classes);

  Polarity class_of(std::size_t category) const { return classes_[category]; }
  void set(std::size_t category, Polarity p) { classes_[category] = p; }

  std::size_t size() const;  // number of non-neutral categories
  bool empty() const { return size() == 0; }
  std::vector<CompositeLabel> labels() const;  // sorted by label index

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;

 private:
  std::array<Polarity, kNumCategories> classes_;
};

// Category contributes (category, polarity) iff its class is not neutral.
PredictionSet decode_to_set(const corpus::LabelMatrix& matrix);
PredictionSet decode_to_set(const std::array<Polarity, kNumCategories>& classes);

// Inverse of decode on valid annotation sets.
std::vector<corpus::Annotation> to_annotations(const PredictionSet& set);

struct EvalPair {
  std::vector<PredictionSet> predicted;
  std::vector<PredictionSet> gold;

  std::size_t size() const { return predicted.size(); }
};

// Mean over samples of |pred ∩ gold| / |pred ∪ gold|; a sample with both
// sets empty scores 1. Throws DataError when the pair is empty.
double jaccard_index(const EvalPair& pairs);

// Mean symmetric-difference size over samples, normalized by the 18-label
// universe. Throws DataError when the pair is empty.
double hamming_loss(const EvalPair& pairs);

struct PerLabelStats {
  CompositeLabel label;
  std::uint64_t tp = 0, fp = 0, fn = 0;
  std::uint64_t support = 0;  // gold occurrences
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  bool precision_defined = false, recall_defined = false, f1_defined = false;
};

// One-vs-rest counts per composite label; zero-denominator cells are
// reported as 0 with the corresponding *_defined flag cleared.
std::vector<PerLabelStats> per_label_report(const EvalPair& pairs);

// Prediction file: JSONL {"id": "...", "labels": [...]} — same label payload
// as the dataset format, so gold files can be read as predictions.
struct PredictionRecord {
  std::string id;
  PredictionSet set;
};

std::vector<PredictionRecord> load_predictions(const std::filesystem::path& path);
std::string serialize_predictions(const std::vector<PredictionRecord>& records);
void save_predictions(const std::vector<PredictionRecord>& records,
                      const std::filesystem::path& path);

// Positional alignment by review id; throws AlignmentError naming the first
// divergent id.
EvalPair align(const std::vector<PredictionRecord>& predicted,
               const std::vector<PredictionRecord>& gold);

}  // namespace absa::metrics
