#include "absa/corpus/schema.hpp"

#include <algorithm>

#include "absa/util/errors.hpp"

namespace absa::corpus {

const std::array<std::string_view, kNumCategories>& category_names() {
  static const std::array<std::string_view, kNumCategories> names = {
      "Actor", "Acting", "Story", "Style", "Movie",
      "Screenplay", "Content", "Issue", "Director"};
  return names;
}

std::optional<std::size_t> category_index(std::string_view name) {
  const auto& names = category_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::kNeutral:
      return "neutral";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kPositive:
      return "positive";
  }
  return "neutral";
}

std::optional<Polarity> polarity_from_name(std::string_view name) {
  if (name == "negative") return Polarity::kNegative;
  if (name == "positive") return Polarity::kPositive;
  if (name == "neutral") return Polarity::kNeutral;
  return std::nullopt;
}

std::array<std::array<std::uint8_t, kNumClasses>, kNumCategories>
LabelMatrix::to_matrix() const {
  std::array<std::array<std::uint8_t, kNumClasses>, kNumCategories> m{};
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    m[c][static_cast<std::size_t>(classes_[c])] = 1;
  }
  return m;
}

LabelMatrix transform_labels(const std::vector<Annotation>& annotations) {
  LabelMatrix out;
  for (const Annotation& a : annotations) {
    const Polarity existing = out.class_of(a.category);
    if (existing != Polarity::kNeutral && existing != a.polarity) {
      throw DataError("conflicting annotation for category '" +
                      std::string(category_names()[a.category]) + "'");
    }
    out.set_class(a.category, a.polarity);
  }
  return out;
}

}  // namespace absa::corpus
